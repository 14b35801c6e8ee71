#pragma once

#include "nagata/classify.hpp"
#include "nagata/linalg.hpp"
#include "nagata/lojasiewicz.hpp"
#include "nagata/nagata.hpp"
#include "nagata/parser.hpp"
#include "nagata/pde.hpp"
#include "nagata/polynomial.hpp"
#include "nagata/random.hpp"
#include "nagata/rational.hpp"
