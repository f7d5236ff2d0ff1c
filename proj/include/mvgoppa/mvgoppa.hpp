#ifndef MVGOPPA_MVGOPPA_HPP
#define MVGOPPA_MVGOPPA_HPP

#include "codes.hpp"
#include "errors.hpp"
#include "gf.hpp"
#include "linalg.hpp"
#include "poly.hpp"
#include "theory.hpp"

#endif
