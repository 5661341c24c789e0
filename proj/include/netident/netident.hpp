#pragma once

#include "netident/emp.hpp"
#include "netident/fixtures.hpp"
#include "netident/graph.hpp"
#include "netident/identifiability.hpp"
#include "netident/instance.hpp"
#include "netident/io.hpp"
#include "netident/matrix.hpp"
#include "netident/repro.hpp"
#include "netident/rng.hpp"
#include "netident/search.hpp"
