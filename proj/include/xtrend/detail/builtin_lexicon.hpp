#pragma once

// Generated word list; one entry per token, values in {+-0.3, +-0.5, +-0.7, +-1.0}.

#include <array>
#include <string_view>
#include <utility>

namespace xtrend::detail {

inline constexpr std::array<std::pair<std::string_view, double>, 1524> kBuiltinLexicon = {{
    {"abandon", -0.5},
    {"abandoned", -0.5},
    {"abundance", +0.5},
    {"abundant", +0.5},
    {"abysmal", -1.0},
    {"accelerate", +0.7},
    {"accelerated", +0.7},
    {"accelerating", +0.7},
    {"accept", +0.3},
    {"acceptable", +0.3},
    {"accepted", +0.3},
    {"accessible", +0.3},
    {"accomplish", +0.7},
    {"accomplished", +0.7},
    {"accretive", +0.5},
    {"accumulate", +0.5},
    {"accumulating", +0.5},
    {"accurate", +0.5},
    {"achieve", +0.7},
    {"achieved", +0.7},
    {"achievement", +0.7},
    {"achievements", +0.7},
    {"active", +0.3},
    {"actively", +0.3},
    {"adaptable", +0.3},
    {"adequate", +0.3},
    {"admirable", +0.7},
    {"admire", +0.7},
    {"admired", +0.7},
    {"adorable", +0.5},
    {"advance", +0.7},
    {"advanced", +0.7},
    {"advances", +0.7},
    {"advancing", +0.7},
    {"adverse", -0.5},
    {"adversely", -0.5},
    {"affordable", +0.5},
    {"afraid", -0.7},
    {"aged", -0.3},
    {"aggressive", -0.5},
    {"aging", -0.3},
    {"agree", +0.3},
    {"agreed", +0.3},
    {"agreement", +0.5},
    {"agrees", +0.3},
    {"ahead", +0.5},
    {"alarm", -0.5},
    {"alarmed", -0.5},
    {"alarming", -0.5},
    {"alert", +0.3},
    {"allow", +0.3},
    {"allowed", +0.3},
    {"alright", +0.3},
    {"amazing", +1.0},
    {"ample", +0.5},
    {"anger", -0.7},
    {"angry", -0.7},
    {"annihilated", -1.0},
    {"annoy", -0.7},
    {"annoyed", -0.7},
    {"annoying", -0.7},
    {"anxiety", -0.7},
    {"anxious", -0.7},
    {"appalling", -1.0},
    {"appealing", +0.5},
    {"applaud", +0.7},
    {"applauded", +0.7},
    {"appreciate", +0.7},
    {"appreciated", +0.7},
    {"appropriate", +0.3},
    {"approval", +0.5},
    {"approve", +0.5},
    {"approved", +0.5},
    {"approves", +0.5},
    {"ashamed", -0.5},
    {"atrocious", -1.0},
    {"attack", -0.5},
    {"attacked", -0.5},
    {"attacks", -0.5},
    {"attractive", +0.5},
    {"authentic", +0.3},
    {"available", +0.3},
    {"average", -0.3},
    {"award", +0.5},
    {"awarded", +0.5},
    {"awards", +0.5},
    {"aware", +0.3},
    {"awesome", +1.0},
    {"awful", -1.0},
    {"awkward", -0.5},
    {"bad", -0.7},
    {"bagholder", -0.5},
    {"bagholders", -0.5},
    {"balance", +0.3},
    {"balanced", +0.3},
    {"ban", -0.7},
    {"bankrupt", -1.0},
    {"bankruptcy", -1.0},
    {"banned", -0.7},
    {"bans", -0.7},
    {"bargain", +0.7},
    {"barrier", -0.5},
    {"barriers", -0.5},
    {"bear", -0.7},
    {"bearish", -0.7},
    {"bearishness", -0.5},
    {"bears", -0.5},
    {"beat", +0.7},
    {"beating", +0.7},
    {"beats", +0.7},
    {"beautiful", +0.7},
    {"beneficial", +0.7},
    {"benefit", +0.7},
    {"benefited", +0.7},
    {"benefits", +0.7},
    {"best", +0.7},
    {"bet", -0.3},
    {"better", +0.7},
    {"betting", -0.3},
    {"bigger", +0.5},
    {"biggest", +0.5},
    {"blame", -0.7},
    {"blamed", -0.7},
    {"blames", -0.7},
    {"bland", -0.3},
    {"bleak", -0.5},
    {"blessed", +0.5},
    {"blessing", +0.5},
    {"blockbuster", +1.0},
    {"bloodbath", -1.0},
    {"bogus", -0.5},
    {"bomb", -0.5},
    {"bonanza", +1.0},
    {"bonus", +0.5},
    {"bonuses", +0.5},
    {"boom", +0.7},
    {"booming", +0.7},
    {"booms", +0.7},
    {"boost", +0.7},
    {"boosted", +0.7},
    {"boosting", +0.7},
    {"bored", -0.5},
    {"boring", -0.5},
    {"bottleneck", -0.7},
    {"bravo", +0.7},
    {"breach", -0.7},
    {"breached", -0.7},
    {"break", -0.7},
    {"breaking", -0.7},
    {"breakout", +0.7},
    {"breaks", -0.7},
    {"breakthrough", +1.0},
    {"bright", +0.5},
    {"brighter", +0.5},
    {"brilliance", +0.5},
    {"brilliant", +1.0},
    {"broke", -0.5},
    {"broken", -0.7},
    {"brutal", -0.5},
    {"bubble", -0.7},
    {"bull", +0.5},
    {"bullish", +1.0},
    {"bullishness", +0.5},
    {"bulls", +0.5},
    {"bumpy", -0.5},
    {"burden", -0.5},
    {"burdened", -0.5},
    {"burned", -0.5},
    {"burning", -0.5},
    {"bust", -0.5},
    {"busted", -0.5},
    {"busy", +0.3},
    {"buy", +0.7},
    {"buyback", +0.5},
    {"buybacks", +0.5},
    {"buying", +0.7},
    {"calls", +0.5},
    {"calm", +0.5},
    {"calmer", +0.5},
    {"cancel", -0.7},
    {"canceled", -0.7},
    {"cancellation", -0.7},
    {"cancelled", -0.7},
    {"cancels", -0.7},
    {"capable", +0.5},
    {"careless", -0.7},
    {"carnage", -1.0},
    {"catalyst", +0.5},
    {"catalysts", +0.5},
    {"catastrophe", -1.0},
    {"catastrophic", -1.0},
    {"catastrophically", -1.0},
    {"caution", -0.5},
    {"cautious", -0.5},
    {"cautiously", -0.5},
    {"celebrate", +0.7},
    {"celebrated", +0.7},
    {"celebrating", +0.7},
    {"celebration", +0.7},
    {"certified", +0.3},
    {"challenge", -0.5},
    {"challenges", -0.5},
    {"challenging", -0.5},
    {"champ", +0.5},
    {"champion", +0.5},
    {"champions", +0.5},
    {"chaos", -0.7},
    {"chaotic", -0.7},
    {"charming", +0.5},
    {"cheap", +0.5},
    {"cheat", -0.7},
    {"cheated", -0.7},
    {"cheating", -0.7},
    {"cheer", +0.5},
    {"cheered", +0.5},
    {"cheerful", +0.5},
    {"cheering", +0.5},
    {"cheers", +0.7},
    {"cheery", +0.5},
    {"choppy", -0.5},
    {"clarity", +0.5},
    {"clean", +0.5},
    {"clear", +0.5},
    {"clever", +0.5},
    {"climb", +0.7},
    {"climbed", +0.7},
    {"climbing", +0.7},
    {"climbs", +0.7},
    {"cloudy", -0.5},
    {"clumsy", -0.5},
    {"cold", -0.5},
    {"colder", -0.5},
    {"collapse", -1.0},
    {"collapsed", -1.0},
    {"collapses", -1.0},
    {"collapsing", -1.0},
    {"comfort", +0.5},
    {"comfortable", +0.5},
    {"competent", +0.5},
    {"complain", -0.7},
    {"complained", -0.7},
    {"complaint", -0.7},
    {"complaints", -0.7},
    {"complex", -0.3},
    {"complexity", -0.3},
    {"complicated", -0.3},
    {"compound", +0.5},
    {"compounder", +0.5},
    {"compounding", +0.5},
    {"concern", -0.7},
    {"concerned", -0.7},
    {"concerning", -0.7},
    {"concerns", -0.7},
    {"confidence", +0.7},
    {"confident", +0.7},
    {"confidently", +0.5},
    {"confirmed", +0.3},
    {"conflict", -0.5},
    {"conflicts", -0.5},
    {"confused", -0.5},
    {"confusing", -0.5},
    {"confusion", -0.5},
    {"congrats", +0.7},
    {"congratulations", +0.7},
    {"consent", +0.3},
    {"constructive", +0.5},
    {"contraction", -0.7},
    {"convenient", +0.3},
    {"cool", +0.5},
    {"correct", +0.5},
    {"corrupt", -0.7},
    {"corruption", -0.7},
    {"cost", -0.5},
    {"costlier", -0.3},
    {"costly", -0.7},
    {"costs", -0.5},
    {"crap", -0.5},
    {"crash", -1.0},
    {"crashed", -1.0},
    {"crashes", -1.0},
    {"crashing", -1.0},
    {"crisis", -1.0},
    {"criticism", -0.7},
    {"criticize", -0.7},
    {"criticized", -0.7},
    {"crucial", +0.3},
    {"cruel", -0.5},
    {"crushed", +1.0},
    {"crushing", +1.0},
    {"curiosity", +0.3},
    {"curious", +0.3},
    {"cut", -0.7},
    {"cute", +0.5},
    {"cuts", -0.7},
    {"cutting", -0.7},
    {"damage", -0.7},
    {"damaged", -0.7},
    {"damaging", -0.7},
    {"danger", -0.7},
    {"dangerous", -0.7},
    {"dark", -0.5},
    {"darker", -0.5},
    {"dated", -0.3},
    {"dead", -1.0},
    {"deal", +0.5},
    {"deals", +0.5},
    {"death", -1.0},
    {"debacle", -0.5},
    {"debt", -0.7},
    {"debts", -0.7},
    {"decelerate", -0.5},
    {"decelerating", -0.5},
    {"deceleration", -0.5},
    {"decent", +0.5},
    {"decline", -0.7},
    {"declined", -0.7},
    {"declines", -0.7},
    {"declining", -0.7},
    {"decrease", -0.5},
    {"decreased", -0.5},
    {"decreases", -0.5},
    {"decreasing", -0.5},
    {"default", -1.0},
    {"defaulted", -1.0},
    {"defect", -0.7},
    {"defective", -0.7},
    {"deficient", -0.3},
    {"deficit", -0.7},
    {"delay", -0.7},
    {"delayed", -0.7},
    {"delays", -0.7},
    {"delight", +0.7},
    {"delighted", +0.7},
    {"delightful", +0.7},
    {"delist", -0.5},
    {"delisted", -0.5},
    {"delisting", -0.5},
    {"denied", -0.7},
    {"denies", -0.7},
    {"deny", -0.7},
    {"depart", -0.5},
    {"departed", -0.5},
    {"departure", -0.5},
    {"dependence", -0.3},
    {"dependent", -0.3},
    {"depression", -0.7},
    {"despise", -1.0},
    {"despised", -1.0},
    {"devastated", -1.0},
    {"devastating", -1.0},
    {"devastation", -1.0},
    {"diamond", +0.5},
    {"die", -1.0},
    {"difficult", -0.5},
    {"difficulty", -0.5},
    {"dilute", -0.5},
    {"diluted", -0.5},
    {"dilution", -0.5},
    {"dilutive", -0.5},
    {"dim", -0.5},
    {"dip", -0.5},
    {"dipped", -0.5},
    {"dipping", -0.5},
    {"dips", -0.5},
    {"disappear", -0.5},
    {"disappeared", -0.5},
    {"disappoint", -0.7},
    {"disappointed", -0.7},
    {"disappointing", -0.7},
    {"disappointment", -0.7},
    {"disappoints", -0.7},
    {"disaster", -1.0},
    {"disastrous", -1.0},
    {"discount", +0.5},
    {"discounts", +0.5},
    {"disease", -0.5},
    {"disgust", -1.0},
    {"disgusting", -1.0},
    {"dispute", -0.5},
    {"disputed", -0.5},
    {"disputes", -0.5},
    {"distinct", +0.3},
    {"dive", -0.7},
    {"dived", -0.7},
    {"diverse", +0.3},
    {"dives", -0.7},
    {"dividend", +0.7},
    {"dividends", +0.7},
    {"diving", -0.7},
    {"dominant", +0.7},
    {"dominate", +0.7},
    {"dominates", +0.7},
    {"dominating", +0.7},
    {"doom", -1.0},
    {"doomed", -1.0},
    {"doubt", -0.5},
    {"doubtful", -0.5},
    {"doubts", -0.5},
    {"downgrade", -0.7},
    {"downgraded", -0.7},
    {"downgrades", -0.7},
    {"downgrading", -0.7},
    {"downside", -0.7},
    {"downtrend", -0.7},
    {"downturn", -0.7},
    {"dreadful", -1.0},
    {"drop", -0.7},
    {"dropped", -0.7},
    {"dropping", -0.7},
    {"drops", -0.7},
    {"dubious", -0.5},
    {"dull", -0.5},
    {"dump", -0.7},
    {"dumped", -0.7},
    {"dumping", -0.7},
    {"dumpster", -0.5},
    {"dying", -1.0},
    {"dynamic", +0.3},
    {"eager", +0.3},
    {"earnings", +0.5},
    {"ease", +0.5},
    {"eased", +0.5},
    {"easier", +0.5},
    {"easily", +0.5},
    {"easing", +0.5},
    {"easy", +0.5},
    {"ecstatic", +1.0},
    {"edge", +0.5},
    {"effective", +0.5},
    {"effectively", +0.5},
    {"efficiency", +0.7},
    {"efficient", +0.7},
    {"elegant", +0.7},
    {"embarrassed", -0.5},
    {"embarrassing", -0.5},
    {"embezzle", -1.0},
    {"embezzlement", -1.0},
    {"empower", +0.5},
    {"empowered", +0.5},
    {"empowering", +0.5},
    {"enable", +0.3},
    {"enabled", +0.3},
    {"enables", +0.3},
    {"encourage", +0.5},
    {"encouraged", +0.5},
    {"encouragement", +0.5},
    {"encouraging", +0.5},
    {"endorse", +0.5},
    {"endorsed", +0.5},
    {"energetic", +0.3},
    {"energy", +0.3},
    {"engaged", +0.3},
    {"engaging", +0.3},
    {"enjoy", +0.7},
    {"enjoyable", +0.7},
    {"enjoyed", +0.7},
    {"enjoying", +0.7},
    {"enough", +0.3},
    {"epic", +0.5},
    {"epidemic", -0.5},
    {"error", -0.7},
    {"errors", -0.7},
    {"essential", +0.3},
    {"established", +0.3},
    {"estimate", -0.3},
    {"estimated", -0.3},
    {"euphoric", +1.0},
    {"eviction", -0.5},
    {"evil", -0.7},
    {"exceed", +0.7},
    {"exceeded", +0.7},
    {"exceeding", +0.7},
    {"exceeds", +0.7},
    {"excellent", +1.0},
    {"exceptional", +1.0},
    {"excited", +0.7},
    {"excitement", +0.7},
    {"exciting", +0.7},
    {"exhausted", -0.5},
    {"exhilarating", +1.0},
    {"exit", -0.5},
    {"exited", -0.5},
    {"exits", -0.5},
    {"expand", +0.7},
    {"expanded", +0.7},
    {"expanding", +0.7},
    {"expansion", +0.7},
    {"expected", +0.3},
    {"expense", -0.5},
    {"expenses", -0.5},
    {"expensive", -0.7},
    {"experienced", +0.3},
    {"explosion", -0.5},
    {"exposed", -0.5},
    {"exposure", -0.5},
    {"extraordinary", +1.0},
    {"fabulous", +1.0},
    {"fade", -0.5},
    {"faded", -0.5},
    {"fades", -0.5},
    {"fading", -0.5},
    {"fail", -0.7},
    {"failed", -0.7},
    {"failing", -0.7},
    {"fails", -0.7},
    {"failure", -0.7},
    {"failures", -0.7},
    {"fair", +0.5},
    {"fairly", +0.5},
    {"fake", -0.5},
    {"fall", -0.7},
    {"falling", -0.7},
    {"falls", -0.7},
    {"fancy", +0.5},
    {"fantastic", +1.0},
    {"fast", +0.5},
    {"faster", +0.5},
    {"favorable", +0.7},
    {"favored", +0.7},
    {"favorite", +0.7},
    {"favourable", +0.7},
    {"fear", -0.7},
    {"feared", -0.7},
    {"fearful", -0.7},
    {"fears", -0.7},
    {"feasible", +0.3},
    {"fell", -0.7},
    {"fiasco", -0.5},
    {"fine", -0.7},
    {"fined", -0.7},
    {"fines", -0.7},
    {"finest", +0.5},
    {"fire", -0.5},
    {"fired", -0.7},
    {"fires", -0.5},
    {"firing", -0.7},
    {"firm", +0.3},
    {"firmer", +0.3},
    {"firming", +0.3},
    {"fishy", -0.5},
    {"fit", +0.3},
    {"fitting", +0.3},
    {"flat", -0.5},
    {"flattish", -0.5},
    {"flaw", -0.7},
    {"flawed", -0.7},
    {"flawless", +1.0},
    {"flaws", -0.7},
    {"flexible", +0.3},
    {"flop", -0.5},
    {"flopped", -0.5},
    {"foreclosure", -0.5},
    {"fortunate", +0.5},
    {"fortune", +0.5},
    {"forward", +0.3},
    {"fragile", -0.5},
    {"fraud", -1.0},
    {"fraudulent", -1.0},
    {"freebie", +0.5},
    {"freeze", -0.5},
    {"fresh", +0.5},
    {"friendly", +0.5},
    {"froze", -0.5},
    {"frozen", -0.5},
    {"frustrated", -0.7},
    {"frustrating", -0.7},
    {"frustration", -0.7},
    {"fun", +0.5},
    {"funny", +0.5},
    {"furious", -1.0},
    {"gain", +0.7},
    {"gained", +0.7},
    {"gaining", +0.7},
    {"gains", +0.7},
    {"gamble", -0.3},
    {"gambling", -0.3},
    {"garbage", -0.5},
    {"gem", +0.5},
    {"gems", +0.5},
    {"generosity", +0.5},
    {"generous", +0.5},
    {"genius", +0.5},
    {"genuine", +0.3},
    {"gift", +0.5},
    {"gifts", +0.5},
    {"glad", +0.5},
    {"gladly", +0.5},
    {"gloom", -0.5},
    {"gloomy", -0.5},
    {"glorious", +1.0},
    {"good", +0.7},
    {"gorgeous", +0.5},
    {"gradual", +0.3},
    {"gradually", +0.3},
    {"grant", +0.5},
    {"granted", +0.5},
    {"grateful", +0.7},
    {"great", +0.7},
    {"greatest", +0.5},
    {"greed", -0.7},
    {"greedy", -0.7},
    {"green", +0.5},
    {"greens", +0.5},
    {"grew", +0.7},
    {"grim", -0.5},
    {"grow", +0.7},
    {"growing", +0.7},
    {"grows", +0.7},
    {"growth", +0.7},
    {"guilt", -0.5},
    {"guilty", -0.5},
    {"hack", -0.7},
    {"hacked", -0.7},
    {"halt", -0.7},
    {"halted", -0.7},
    {"halts", -0.7},
    {"handsome", +0.5},
    {"handy", +0.3},
    {"happier", +0.7},
    {"happiest", +0.7},
    {"happiness", +0.7},
    {"happy", +0.7},
    {"hard", -0.5},
    {"harder", -0.5},
    {"harm", -0.7},
    {"harmful", -0.7},
    {"hate", -1.0},
    {"hated", -1.0},
    {"hateful", -1.0},
    {"hates", -1.0},
    {"hawkish", -0.3},
    {"headwind", -0.5},
    {"headwinds", -0.5},
    {"healthier", +0.5},
    {"healthy", +0.5},
    {"helpful", +0.5},
    {"hero", +0.5},
    {"heroes", +0.5},
    {"hesitant", -0.5},
    {"hesitate", -0.5},
    {"hesitation", -0.3},
    {"higher", +0.5},
    {"highs", +0.7},
    {"hike", -0.3},
    {"hiked", -0.3},
    {"hikes", -0.3},
    {"hit", +0.7},
    {"hits", +0.7},
    {"hoax", -0.5},
    {"hodl", +0.5},
    {"hold", +0.5},
    {"holding", +0.5},
    {"honest", +0.5},
    {"honesty", +0.5},
    {"honor", +0.5},
    {"honored", +0.5},
    {"hooray", +0.7},
    {"hope", +0.5},
    {"hopeful", +0.5},
    {"hopeless", -1.0},
    {"hopes", +0.5},
    {"hoping", +0.5},
    {"horrendous", -1.0},
    {"horrible", -1.0},
    {"horrific", -1.0},
    {"horrifying", -1.0},
    {"hostile", -0.5},
    {"hot", +0.5},
    {"hurdle", -0.5},
    {"hurdles", -0.5},
    {"hurt", -0.7},
    {"hurting", -0.7},
    {"hurts", -0.7},
    {"hype", -0.3},
    {"hyped", -0.3},
    {"iconic", +0.5},
    {"ideal", +0.5},
    {"ill", -0.5},
    {"illness", -0.5},
    {"impairment", -0.5},
    {"impairments", -0.5},
    {"impeccable", +1.0},
    {"important", +0.3},
    {"imprecise", -0.3},
    {"impressed", +0.7},
    {"impressive", +0.7},
    {"improve", +0.5},
    {"improved", +0.5},
    {"improvement", +0.5},
    {"improvements", +0.5},
    {"improves", +0.5},
    {"improving", +0.5},
    {"inaccurate", -0.3},
    {"inadequate", -0.3},
    {"inclusive", +0.3},
    {"incompetent", -0.7},
    {"incomplete", -0.3},
    {"increase", +0.5},
    {"increased", +0.5},
    {"increases", +0.5},
    {"increasing", +0.5},
    {"incredible", +1.0},
    {"infected", -0.5},
    {"infection", -0.5},
    {"inflation", -0.7},
    {"innovate", +0.7},
    {"innovation", +0.7},
    {"innovations", +0.7},
    {"innovative", +0.7},
    {"insolvency", -1.0},
    {"insolvent", -1.0},
    {"instability", -0.7},
    {"insufficient", -0.3},
    {"interest", +0.3},
    {"interested", +0.5},
    {"interesting", +0.5},
    {"investigation", -0.7},
    {"jackpot", +1.0},
    {"jobless", -0.5},
    {"jolly", +0.5},
    {"joy", +0.7},
    {"joyful", +0.7},
    {"jump", +0.7},
    {"jumped", +0.7},
    {"jumping", +0.7},
    {"jumps", +0.7},
    {"junk", -0.5},
    {"keen", +0.3},
    {"key", +0.3},
    {"kill", -1.0},
    {"killed", -1.0},
    {"kind", +0.5},
    {"kindness", +0.5},
    {"kudos", +0.7},
    {"lack", -0.5},
    {"lacking", -0.5},
    {"lackluster", -0.3},
    {"lacklustre", -0.3},
    {"lacks", -0.5},
    {"lag", -0.5},
    {"lagged", -0.5},
    {"lagging", -0.5},
    {"lags", -0.5},
    {"laid", -0.7},
    {"largest", +0.5},
    {"late", -0.3},
    {"later", -0.3},
    {"launch", +0.5},
    {"launched", +0.5},
    {"launches", +0.5},
    {"launching", +0.5},
    {"lawsuit", -0.7},
    {"lawsuits", -0.7},
    {"layoff", -0.7},
    {"layoffs", -0.7},
    {"lazy", -0.7},
    {"lead", +0.5},
    {"leader", +0.7},
    {"leadership", +0.7},
    {"leading", +0.7},
    {"leads", +0.5},
    {"leak", -0.7},
    {"leaked", -0.7},
    {"leave", -0.5},
    {"leaves", -0.5},
    {"leaving", -0.5},
    {"legacy", -0.3},
    {"legend", +0.5},
    {"legendary", +0.5},
    {"leveraged", -0.5},
    {"liabilities", -0.5},
    {"liability", -0.5},
    {"liar", -0.7},
    {"lie", -0.7},
    {"lied", -0.7},
    {"lies", -0.7},
    {"lift", +0.5},
    {"lifted", +0.5},
    {"lifts", +0.5},
    {"like", +0.5},
    {"liked", +0.5},
    {"likely", +0.3},
    {"likes", +0.5},
    {"limit", -0.5},
    {"limited", -0.5},
    {"limits", -0.5},
    {"liquidated", -0.5},
    {"liquidation", -0.5},
    {"litigation", -0.7},
    {"lively", +0.3},
    {"loathe", -1.0},
    {"long", +0.5},
    {"longs", +0.5},
    {"longterm", +0.5},
    {"lose", -0.7},
    {"loser", -0.7},
    {"losers", -0.7},
    {"loses", -0.7},
    {"losing", -0.7},
    {"loss", -0.7},
    {"losses", -0.7},
    {"lost", -0.7},
    {"love", +0.7},
    {"loved", +0.7},
    {"lovely", +0.7},
    {"loves", +0.7},
    {"low", -0.5},
    {"lower", -0.5},
    {"lows", -0.5},
    {"loyal", +0.5},
    {"loyalty", +0.5},
    {"luckily", +0.5},
    {"lucky", +0.5},
    {"lucrative", +0.7},
    {"lukewarm", -0.3},
    {"lying", -0.7},
    {"mad", -0.7},
    {"magnificent", +1.0},
    {"majestic", +1.0},
    {"major", +0.3},
    {"manipulated", -0.5},
    {"manipulation", -0.5},
    {"margin", +0.5},
    {"marginal", -0.3},
    {"marginally", -0.3},
    {"margincall", -0.5},
    {"margins", +0.5},
    {"marvelous", +1.0},
    {"masterful", +1.0},
    {"mature", +0.3},
    {"maybe", +0.3},
    {"mediocre", -0.3},
    {"meh", -0.3},
    {"meltdown", -1.0},
    {"merry", +0.5},
    {"mess", -0.5},
    {"messy", -0.5},
    {"middling", -0.3},
    {"mildly", +0.3},
    {"milestone", +0.7},
    {"milestones", +0.7},
    {"minimal", -0.3},
    {"minor", -0.3},
    {"miserable", -0.7},
    {"misery", -0.7},
    {"mislead", -0.3},
    {"misleading", -0.3},
    {"miss", -0.7},
    {"missed", -0.7},
    {"misses", -0.7},
    {"missing", -0.7},
    {"mistake", -0.7},
    {"mistaken", -0.3},
    {"mistakes", -0.7},
    {"misunderstood", -0.3},
    {"mixed", -0.5},
    {"moderate", +0.3},
    {"moderately", +0.3},
    {"modest", +0.3},
    {"momentum", +0.7},
    {"moon", +0.5},
    {"mooning", +0.5},
    {"moonshot", +1.0},
    {"muted", -0.3},
    {"nasty", -0.7},
    {"natural", +0.3},
    {"neat", +0.3},
    {"negative", -0.7},
    {"neutralize", +0.3},
    {"new", +0.5},
    {"nice", +0.5},
    {"nightmare", -1.0},
    {"noise", -0.3},
    {"noisy", -0.3},
    {"normal", +0.3},
    {"northward", +0.3},
    {"notable", +0.3},
    {"noteworthy", +0.3},
    {"obliterated", -1.0},
    {"obsolete", -0.3},
    {"obstacle", -0.5},
    {"obstacles", -0.5},
    {"odd", -0.3},
    {"ok", +0.5},
    {"okay", +0.5},
    {"old", -0.3},
    {"older", -0.3},
    {"onward", +0.3},
    {"open", +0.3},
    {"opened", +0.3},
    {"opening", +0.3},
    {"opens", +0.3},
    {"opportunities", +0.5},
    {"opportunity", +0.5},
    {"optimal", +0.5},
    {"optimism", +0.7},
    {"optimistic", +0.7},
    {"optimistically", +0.5},
    {"optimize", +0.5},
    {"optimized", +0.5},
    {"orderly", +0.3},
    {"ordinary", -0.3},
    {"organic", +0.3},
    {"organized", +0.3},
    {"original", +0.3},
    {"outage", -0.7},
    {"outages", -0.7},
    {"outbreak", -0.5},
    {"outdated", -0.3},
    {"outlook", +0.5},
    {"outperform", +1.0},
    {"outperformed", +1.0},
    {"outperforming", +1.0},
    {"outperforms", +1.0},
    {"outrage", -1.0},
    {"outraged", -1.0},
    {"outrageous", -1.0},
    {"outstanding", +1.0},
    {"overbought", -0.5},
    {"overextended", -0.5},
    {"overhyped", -0.3},
    {"overleveraged", -0.5},
    {"overpriced", -0.7},
    {"oversubscribed", +0.5},
    {"overtake", +0.5},
    {"overtook", +0.5},
    {"overvalued", -0.7},
    {"owe", -0.5},
    {"owed", -0.5},
    {"owes", -0.5},
    {"pain", -0.7},
    {"painful", -0.7},
    {"pandemic", -0.5},
    {"panic", -1.0},
    {"panicked", -1.0},
    {"panicking", -1.0},
    {"partial", -0.3},
    {"partially", -0.3},
    {"partner", +0.5},
    {"partners", +0.5},
    {"partnership", +0.5},
    {"pause", -0.3},
    {"paused", -0.3},
    {"pauses", -0.3},
    {"pausing", -0.3},
    {"payout", +0.7},
    {"peaceful", +0.5},
    {"peak", +0.7},
    {"peaked", +0.7},
    {"penalties", -0.7},
    {"penalty", -0.7},
    {"pending", -0.3},
    {"perfect", +1.0},
    {"perk", +0.5},
    {"perks", +0.5},
    {"permit", +0.3},
    {"permitted", +0.3},
    {"pessimism", -0.7},
    {"pessimistic", -0.7},
    {"phenomenal", +1.0},
    {"phony", -0.5},
    {"plain", +0.3},
    {"plateau", -0.3},
    {"plateaued", -0.3},
    {"plausible", +0.3},
    {"pleased", +0.7},
    {"pleasing", +0.7},
    {"pleasure", +0.7},
    {"plenty", +0.5},
    {"plummet", -1.0},
    {"plummeted", -1.0},
    {"plummeting", -1.0},
    {"plummets", -1.0},
    {"plunge", -1.0},
    {"plunged", -1.0},
    {"plunges", -1.0},
    {"plunging", -1.0},
    {"pointless", -0.7},
    {"polished", +0.3},
    {"ponzi", -1.0},
    {"poor", -0.7},
    {"poorly", -0.7},
    {"popular", +0.7},
    {"positive", +0.7},
    {"possible", +0.3},
    {"possibly", +0.3},
    {"postpone", -0.7},
    {"postponed", -0.7},
    {"potential", +0.5},
    {"poverty", -0.5},
    {"power", +0.5},
    {"powerful", +0.5},
    {"practical", +0.3},
    {"pragmatic", +0.3},
    {"praise", +0.7},
    {"praised", +0.7},
    {"premium", +0.7},
    {"prepared", +0.3},
    {"pressure", -0.5},
    {"pressured", -0.5},
    {"pressures", -0.5},
    {"pretty", +0.5},
    {"pricey", -0.3},
    {"pride", +0.5},
    {"primary", +0.3},
    {"probable", +0.3},
    {"probe", -0.7},
    {"probed", -0.7},
    {"problem", -0.7},
    {"problems", -0.7},
    {"productive", +0.5},
    {"profit", +0.7},
    {"profitability", +0.7},
    {"profitable", +0.7},
    {"profits", +0.7},
    {"progress", +0.5},
    {"progressed", +0.5},
    {"progressing", +0.5},
    {"promise", +0.5},
    {"promised", +0.5},
    {"promising", +0.5},
    {"proper", +0.5},
    {"prosper", +0.7},
    {"prosperity", +0.7},
    {"prosperous", +0.7},
    {"protest", -0.5},
    {"protests", -0.5},
    {"proud", +0.5},
    {"proudly", +0.5},
    {"proven", +0.3},
    {"pure", +0.3},
    {"puts", -0.5},
    {"questionable", -0.5},
    {"quick", +0.5},
    {"quickly", +0.5},
    {"quiet", -0.3},
    {"quieter", -0.3},
    {"quit", -0.5},
    {"quits", -0.5},
    {"raise", -0.3},
    {"raised", -0.3},
    {"rallied", +0.7},
    {"rallies", +0.7},
    {"rally", +0.7},
    {"rallying", +0.7},
    {"rangebound", -0.3},
    {"rare", +0.3},
    {"ready", +0.3},
    {"realistic", +0.3},
    {"reasonable", +0.3},
    {"reasonably", +0.3},
    {"rebound", +0.7},
    {"rebounded", +0.7},
    {"rebounding", +0.7},
    {"recall", -0.7},
    {"recalled", -0.7},
    {"recalls", -0.7},
    {"recession", -0.7},
    {"reckless", -0.7},
    {"recommend", +0.5},
    {"recommended", +0.5},
    {"recommends", +0.5},
    {"record", +1.0},
    {"recordbreaking", +1.0},
    {"recover", +0.7},
    {"recovered", +0.7},
    {"recovering", +0.7},
    {"recovery", +0.7},
    {"reduce", -0.5},
    {"reduced", -0.5},
    {"reduces", -0.5},
    {"reducing", -0.5},
    {"reduction", -0.5},
    {"refined", +0.3},
    {"regret", -0.7},
    {"regrets", -0.7},
    {"regretted", -0.7},
    {"regular", +0.3},
    {"reject", -0.7},
    {"rejected", -0.7},
    {"rejection", -0.7},
    {"rejects", -0.7},
    {"rejoice", +0.5},
    {"rejoicing", +0.5},
    {"rekt", -0.5},
    {"relevant", +0.3},
    {"reliability", +0.7},
    {"reliable", +0.7},
    {"reliant", -0.3},
    {"relief", +0.5},
    {"relieved", +0.5},
    {"remarkable", +0.7},
    {"renewable", +0.3},
    {"repurchase", +0.5},
    {"resign", -0.5},
    {"resignation", -0.5},
    {"resigned", -0.5},
    {"resilience", +0.7},
    {"resilient", +0.7},
    {"restate", -0.5},
    {"restated", -0.5},
    {"restatement", -0.5},
    {"restricted", -0.5},
    {"restriction", -0.5},
    {"restrictions", -0.5},
    {"revenue", +0.5},
    {"revenues", +0.5},
    {"reward", +0.7},
    {"rewarding", +0.7},
    {"rewards", +0.7},
    {"rich", +0.5},
    {"richer", +0.5},
    {"rigged", -0.5},
    {"right", +0.5},
    {"rip", +0.5},
    {"ripped", +0.5},
    {"ripping", +0.5},
    {"rise", +0.7},
    {"rises", +0.7},
    {"rising", +0.7},
    {"risk", -0.7},
    {"risks", -0.7},
    {"risky", -0.7},
    {"robust", +0.7},
    {"rocket", +0.5},
    {"rocketing", +0.5},
    {"rockets", +0.5},
    {"rocky", -0.5},
    {"rose", +0.7},
    {"rough", -0.5},
    {"ruin", -1.0},
    {"ruined", -1.0},
    {"ruinous", -1.0},
    {"rumor", -0.3},
    {"rumors", -0.3},
    {"rumour", -0.3},
    {"sad", -0.7},
    {"sadly", -0.7},
    {"sadness", -0.7},
    {"safe", +0.7},
    {"safer", +0.7},
    {"sale", +0.5},
    {"sales", +0.5},
    {"sanction", -0.7},
    {"sanctions", -0.7},
    {"sank", -0.7},
    {"satisfaction", +0.7},
    {"satisfactory", +0.3},
    {"satisfied", +0.7},
    {"satisfying", +0.7},
    {"savvy", +0.5},
    {"scalable", +0.3},
    {"scam", -1.0},
    {"scammed", -1.0},
    {"scams", -0.5},
    {"scandal", -0.7},
    {"scandals", -0.7},
    {"scarce", -0.3},
    {"scarcity", -0.3},
    {"scared", -0.7},
    {"scary", -0.7},
    {"scum", -0.5},
    {"seasoned", +0.3},
    {"secure", +0.7},
    {"secured", +0.7},
    {"sell", -0.7},
    {"selling", -0.7},
    {"selloff", -0.7},
    {"sensational", +1.0},
    {"shady", -0.5},
    {"shaky", -0.5},
    {"sham", -0.5},
    {"shame", -0.5},
    {"shameful", -0.5},
    {"short", -0.7},
    {"shortage", -0.7},
    {"shortages", -0.7},
    {"shortfall", -0.5},
    {"shortfalls", -0.5},
    {"shorting", -0.7},
    {"shorts", -0.7},
    {"shrank", -0.7},
    {"shrink", -0.7},
    {"shrinking", -0.7},
    {"shrinks", -0.7},
    {"sick", -0.5},
    {"sickness", -0.5},
    {"sideways", -0.3},
    {"significant", +0.3},
    {"simple", +0.5},
    {"sinful", -0.5},
    {"sink", -0.7},
    {"sinking", -0.7},
    {"sinks", -0.7},
    {"skeptical", -0.5},
    {"skepticism", -0.5},
    {"sketchy", -0.5},
    {"skilled", +0.5},
    {"skyrocket", +1.0},
    {"skyrocketed", +1.0},
    {"skyrocketing", +1.0},
    {"slash", -0.7},
    {"slashed", -0.7},
    {"slashing", -0.7},
    {"slid", -0.7},
    {"slide", -0.7},
    {"slides", -0.7},
    {"sliding", -0.7},
    {"slight", +0.3},
    {"slightly", +0.3},
    {"slip", -0.5},
    {"slipped", -0.5},
    {"slipping", -0.5},
    {"slips", -0.5},
    {"sloppy", -0.5},
    {"slow", -0.5},
    {"slowdown", -0.5},
    {"slowed", -0.5},
    {"slower", -0.5},
    {"slowest", -0.3},
    {"slowing", -0.5},
    {"sluggish", -0.5},
    {"slump", -0.7},
    {"slumped", -0.7},
    {"slumping", -0.7},
    {"slumps", -0.7},
    {"smart", +0.5},
    {"smarter", +0.5},
    {"smash", +0.7},
    {"smashed", +1.0},
    {"smooth", +0.5},
    {"smoothly", +0.5},
    {"soar", +1.0},
    {"soared", +1.0},
    {"soaring", +1.0},
    {"soft", -0.5},
    {"softening", -0.5},
    {"softer", -0.5},
    {"solid", +0.7},
    {"sophisticated", +0.3},
    {"sorry", -0.5},
    {"sound", +0.5},
    {"special", +0.3},
    {"spectacular", +1.0},
    {"speculate", -0.3},
    {"speculation", -0.3},
    {"speculative", -0.3},
    {"spending", -0.5},
    {"splendid", +1.0},
    {"squeeze", +0.5},
    {"squeezing", +0.5},
    {"stability", +0.7},
    {"stabilize", +0.5},
    {"stabilized", +0.5},
    {"stabilizing", +0.5},
    {"stable", +0.7},
    {"stagnant", -0.7},
    {"stagnation", -0.7},
    {"stall", -0.3},
    {"stalled", -0.3},
    {"stalling", -0.3},
    {"stalls", -0.3},
    {"standard", +0.3},
    {"steadily", +0.5},
    {"steady", +0.5},
    {"steadying", +0.3},
    {"steal", -0.7},
    {"stellar", +1.0},
    {"stole", -0.7},
    {"stolen", -0.7},
    {"storm", -0.5},
    {"stormy", -0.5},
    {"strange", -0.3},
    {"strength", +0.7},
    {"strengthen", +0.7},
    {"strengthened", +0.7},
    {"strengthening", +0.7},
    {"stress", -0.5},
    {"stressed", -0.5},
    {"stressful", -0.5},
    {"stretched", -0.5},
    {"strike", -0.5},
    {"strikes", -0.5},
    {"strong", +0.7},
    {"stronger", +0.5},
    {"strongest", +0.5},
    {"strongly", +0.5},
    {"struggle", -0.7},
    {"struggled", -0.7},
    {"struggles", -0.7},
    {"struggling", -0.7},
    {"stuck", -0.5},
    {"stunning", +0.7},
    {"sturdy", +0.5},
    {"stylish", +0.5},
    {"subdued", -0.3},
    {"succeed", +0.7},
    {"succeeded", +0.7},
    {"success", +0.7},
    {"successful", +0.7},
    {"successfully", +0.7},
    {"suck", -0.5},
    {"sucked", -0.5},
    {"sucks", -0.5},
    {"sue", -0.7},
    {"sued", -0.7},
    {"sufficient", +0.3},
    {"suing", -0.7},
    {"suitable", +0.5},
    {"sunny", +0.5},
    {"superb", +1.0},
    {"superior", +0.7},
    {"superlative", +1.0},
    {"support", +0.5},
    {"supported", +0.5},
    {"supporting", +0.5},
    {"supportive", +0.5},
    {"surge", +0.7},
    {"surged", +0.7},
    {"surges", +0.7},
    {"surging", +0.7},
    {"surpass", +0.5},
    {"surpassed", +0.5},
    {"surpasses", +0.5},
    {"surprise", -0.3},
    {"surprised", +0.5},
    {"surprising", -0.3},
    {"surprisingly", -0.3},
    {"suspend", -0.7},
    {"suspended", -0.7},
    {"suspension", -0.7},
    {"suspicious", -0.5},
    {"sustainable", +0.3},
    {"sweet", +0.5},
    {"swindle", -1.0},
    {"synergies", +0.5},
    {"synergy", +0.5},
    {"tailwind", +0.5},
    {"tailwinds", +0.5},
    {"tank", -1.0},
    {"tanked", -1.0},
    {"tanking", -1.0},
    {"tariff", -0.5},
    {"tariffs", -0.5},
    {"tax", -0.5},
    {"taxed", -0.5},
    {"taxes", -0.5},
    {"tedious", -0.5},
    {"temporary", -0.3},
    {"tense", -0.5},
    {"tension", -0.5},
    {"tepid", -0.3},
    {"terrible", -1.0},
    {"terrific", +1.0},
    {"terror", -0.5},
    {"terrorist", -0.5},
    {"tested", +0.3},
    {"thank", +0.7},
    {"thankful", +0.7},
    {"thankfully", +0.5},
    {"thanks", +0.7},
    {"theft", -0.7},
    {"threat", -0.7},
    {"threaten", -0.7},
    {"threatened", -0.7},
    {"threatening", -0.7},
    {"threatens", -0.7},
    {"thrilled", +1.0},
    {"thrilling", +1.0},
    {"thrive", +0.7},
    {"thrived", +0.7},
    {"thrives", +0.7},
    {"thriving", +0.7},
    {"tidy", +0.3},
    {"tight", -0.3},
    {"tightened", -0.3},
    {"tightening", -0.3},
    {"tired", -0.5},
    {"tolerable", +0.3},
    {"top", +0.5},
    {"topped", +0.5},
    {"tops", +0.5},
    {"tough", -0.5},
    {"tougher", -0.5},
    {"toxic", -0.7},
    {"tragedy", -1.0},
    {"tragic", -1.0},
    {"trapped", -0.5},
    {"trash", -0.5},
    {"trendy", +0.5},
    {"triumph", +1.0},
    {"triumphant", +1.0},
    {"trouble", -0.7},
    {"troubled", -0.7},
    {"troubling", -0.7},
    {"trust", +0.5},
    {"trusted", +0.5},
    {"trustworthy", +0.5},
    {"tumble", -0.7},
    {"tumbled", -0.7},
    {"tumbles", -0.7},
    {"tumbling", -0.7},
    {"turmoil", -0.7},
    {"typical", +0.3},
    {"ugly", -0.7},
    {"unbeatable", +1.0},
    {"uncertain", -0.7},
    {"uncertainty", -0.7},
    {"unchanged", -0.3},
    {"unclear", -0.5},
    {"underperform", -0.7},
    {"underperformed", -0.7},
    {"underperforming", -0.7},
    {"underperforms", -0.7},
    {"undervalued", +0.7},
    {"underwhelming", -0.3},
    {"unemployed", -0.5},
    {"unemployment", -0.5},
    {"unexpected", -0.3},
    {"unexpectedly", -0.3},
    {"unfavorable", -0.5},
    {"unfavourable", -0.5},
    {"unfortunate", -0.5},
    {"unfortunately", -0.5},
    {"unhappy", -0.7},
    {"unimpressive", -0.3},
    {"unique", +0.3},
    {"unlikely", -0.5},
    {"unremarkable", -0.3},
    {"unresolved", -0.3},
    {"unstable", -0.7},
    {"unstoppable", +1.0},
    {"unusual", -0.3},
    {"upbeat", +0.7},
    {"upgrade", +0.7},
    {"upgraded", +0.7},
    {"upgrades", +0.7},
    {"upgrading", +0.5},
    {"uplift", +0.5},
    {"uplifting", +0.5},
    {"upset", -0.7},
    {"upside", +0.7},
    {"upsized", +0.5},
    {"uptrend", +0.7},
    {"upturn", +0.7},
    {"upward", +0.3},
    {"upwards", +0.3},
    {"useful", +0.5},
    {"useless", -0.7},
    {"usual", +0.3},
    {"vague", -0.5},
    {"validated", +0.3},
    {"valuable", +0.5},
    {"value", +0.5},
    {"vanish", -0.5},
    {"vanished", -0.5},
    {"verified", +0.3},
    {"versatile", +0.3},
    {"viable", +0.3},
    {"vibrant", +0.3},
    {"vicious", -0.5},
    {"vigor", +0.5},
    {"vigorous", +0.5},
    {"violent", -0.5},
    {"virus", -0.5},
    {"vital", +0.3},
    {"volatile", -0.7},
    {"volatility", -0.7},
    {"vulnerability", -0.5},
    {"vulnerable", -0.5},
    {"wait", -0.3},
    {"waiting", -0.3},
    {"waits", -0.3},
    {"war", -0.5},
    {"warm", +0.5},
    {"warn", -0.7},
    {"warned", -0.7},
    {"warning", -0.7},
    {"warnings", -0.5},
    {"warns", -0.7},
    {"wars", -0.5},
    {"waste", -0.7},
    {"wasted", -0.7},
    {"wasteful", -0.7},
    {"weak", -0.7},
    {"weaken", -0.7},
    {"weakened", -0.7},
    {"weakening", -0.7},
    {"weaker", -0.7},
    {"weakest", -0.7},
    {"weakish", -0.5},
    {"weakness", -0.7},
    {"wealth", +0.5},
    {"wealthier", +0.5},
    {"wealthy", +0.5},
    {"weary", -0.5},
    {"weird", -0.3},
    {"welcome", +0.5},
    {"welcomed", +0.5},
    {"well", +0.5},
    {"wicked", -0.5},
    {"willing", +0.3},
    {"win", +0.7},
    {"windfall", +1.0},
    {"winner", +0.7},
    {"winners", +0.7},
    {"winning", +0.7},
    {"wins", +0.7},
    {"wipeout", -1.0},
    {"wise", +0.5},
    {"wonderful", +1.0},
    {"worried", -0.7},
    {"worries", -0.7},
    {"worry", -0.7},
    {"worrying", -0.7},
    {"worst", -1.0},
    {"worth", +0.5},
    {"worthless", -1.0},
    {"worthy", +0.5},
    {"wow", +0.7},
    {"writedown", -0.5},
    {"writedowns", -0.5},
    {"wrong", -0.7},
    {"yay", +0.7},
}};

}  // namespace xtrend::detail
