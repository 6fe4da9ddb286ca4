#ifndef HOPFSIMP_HOPFSIMP_HPP
#define HOPFSIMP_HOPFSIMP_HPP

#include "hopfsimp/core.hpp"
#include "hopfsimp/polynomial.hpp"
#include "hopfsimp/complex.hpp"
#include "hopfsimp/graph.hpp"
#include "hopfsimp/hopf.hpp"
#include "hopfsimp/symfunc.hpp"
#include "hopfsimp/characters.hpp"
#include "hopfsimp/io.hpp"
#include "hopfsimp/verify.hpp"

#endif  // HOPFSIMP_HOPFSIMP_HPP
