#pragma once

// Everything except the command line front end.

#include "xtrend/analyses.hpp"
#include "xtrend/analytics.hpp"
#include "xtrend/clean_job.hpp"
#include "xtrend/cleaning.hpp"
#include "xtrend/date.hpp"
#include "xtrend/engine.hpp"
#include "xtrend/error.hpp"
#include "xtrend/generator.hpp"
#include "xtrend/ingestion.hpp"
#include "xtrend/report.hpp"
#include "xtrend/sentiment.hpp"
#include "xtrend/stock_metrics.hpp"
