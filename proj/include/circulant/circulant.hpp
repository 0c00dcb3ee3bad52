#ifndef CIRCULANT_CIRCULANT_HPP
#define CIRCULANT_CIRCULANT_HPP

#include "abelian.hpp"
#include "analyzer.hpp"
#include "arith.hpp"
#include "connection_set.hpp"
#include "digraph.hpp"
#include "error.hpp"
#include "oracle.hpp"
#include "permgroup.hpp"
#include "permutation.hpp"

#endif // CIRCULANT_CIRCULANT_HPP
