#pragma once

#include "gradedspec/bits.hpp"
#include "gradedspec/error.hpp"
#include "gradedspec/group.hpp"
#include "gradedspec/ideal.hpp"
#include "gradedspec/module.hpp"
#include "gradedspec/ring.hpp"
#include "gradedspec/ring_desc.hpp"
#include "gradedspec/second.hpp"
#include "gradedspec/spectra.hpp"
#include "gradedspec/topology.hpp"
#include "gradedspec/analysis.hpp"
#include "gradedspec/corpus.hpp"
#include "gradedspec/io.hpp"
#include "gradedspec/report.hpp"
#include "gradedspec/search.hpp"
#include "gradedspec/suites.hpp"
