#pragma once

#include "quandle/alexander.hpp"
#include "quandle/biseq.hpp"
#include "quandle/common.hpp"
#include "quandle/congruence.hpp"
#include "quandle/enumerate.hpp"
#include "quandle/homomorphism.hpp"
#include "quandle/laurent.hpp"
#include "quandle/magma.hpp"
#include "quandle/partition.hpp"
#include "quandle/rack_io.hpp"
#include "quandle/rational.hpp"
#include "quandle/shift_quandle.hpp"
#include "quandle/weighted_average.hpp"
