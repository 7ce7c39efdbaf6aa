#pragma once

#include "implicitus/classify.hpp"
#include "implicitus/codec.hpp"
#include "implicitus/config.hpp"
#include "implicitus/coordinates.hpp"
#include "implicitus/dedup.hpp"
#include "implicitus/errors.hpp"
#include "implicitus/extract.hpp"
#include "implicitus/ingest.hpp"
#include "implicitus/labels.hpp"
#include "implicitus/metrics.hpp"
#include "implicitus/model.hpp"
#include "implicitus/pipeline.hpp"
#include "implicitus/report.hpp"
#include "implicitus/snapshot.hpp"
#include "implicitus/summary.hpp"
#include "implicitus/symbol.hpp"
