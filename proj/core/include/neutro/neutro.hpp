#pragma once

#include "neutro/checks.hpp"
#include "neutro/decomposition.hpp"
#include "neutro/entropy.hpp"
#include "neutro/errors.hpp"
#include "neutro/io.hpp"
#include "neutro/rng.hpp"
#include "neutro/triple.hpp"
