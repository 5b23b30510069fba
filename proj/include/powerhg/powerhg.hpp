#pragma once

#include "powerhg/bigint.hpp"
#include "powerhg/errors.hpp"
#include "powerhg/graph.hpp"
#include "powerhg/link_variety.hpp"
#include "powerhg/oracle.hpp"
#include "powerhg/power.hpp"
#include "powerhg/spectra.hpp"
#include "powerhg/walks.hpp"
#include "powerhg/version.hpp"
