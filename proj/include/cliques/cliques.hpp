#pragma once

#include "cliques/bases.hpp"
#include "cliques/clique.hpp"
#include "cliques/enumerate.hpp"
#include "cliques/error.hpp"
#include "cliques/families.hpp"
#include "cliques/harness.hpp"
#include "cliques/io.hpp"
#include "cliques/lincomb.hpp"
#include "cliques/linalg.hpp"
#include "cliques/magma.hpp"
#include "cliques/noncrossing.hpp"
#include "cliques/operad.hpp"
#include "cliques/presentation.hpp"
#include "cliques/report.hpp"
#include "cliques/series.hpp"
