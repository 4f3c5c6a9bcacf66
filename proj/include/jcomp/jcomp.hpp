#pragma once

#include "jcomp/analysis.hpp"
#include "jcomp/citation_matrix.hpp"
#include "jcomp/config.hpp"
#include "jcomp/error.hpp"
#include "jcomp/export.hpp"
#include "jcomp/ingest.hpp"
#include "jcomp/matrix.hpp"
#include "jcomp/metrics.hpp"
