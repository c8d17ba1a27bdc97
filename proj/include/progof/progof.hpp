#pragma once

#include "progof/censoring.hpp"
#include "progof/distributions.hpp"
#include "progof/errors.hpp"
#include "progof/experiments.hpp"
#include "progof/gof.hpp"
#include "progof/io.hpp"
#include "progof/mle.hpp"
#include "progof/reference_tables.hpp"
#include "progof/rng.hpp"
#include "progof/simulate.hpp"
