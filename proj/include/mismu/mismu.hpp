#pragma once

#include "mismu/bounds.hpp"
#include "mismu/canonical.hpp"
#include "mismu/common.hpp"
#include "mismu/families.hpp"
#include "mismu/generate.hpp"
#include "mismu/graph.hpp"
#include "mismu/graph6.hpp"
#include "mismu/matching.hpp"
#include "mismu/mis.hpp"
#include "mismu/report.hpp"
#include "mismu/verify.hpp"
