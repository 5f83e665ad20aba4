#ifndef EULERIAN_EULERIAN_HPP
#define EULERIAN_EULERIAN_HPP

#include "eulerian/errors.hpp"
#include "eulerian/rational.hpp"
#include "eulerian/polynomial.hpp"
#include "eulerian/generators.hpp"
#include "eulerian/oracle.hpp"
#include "eulerian/stability.hpp"
#include "eulerian/lab.hpp"
#include "eulerian/serialize.hpp"

#endif
