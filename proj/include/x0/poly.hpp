#pragma once

#include <utility>
#include <vector>

#include "x0/types.hpp"

namespace x0 {

// Dense univariate polynomial over Q, coefficient i multiplies t^i.
using QPoly = std::vector<Rat>;

void trim(QPoly& p);
int degree(const QPoly& p);  // -1 for the zero polynomial
QPoly from_ints(const std::vector<Int>& c);
QPoly operator+(const QPoly& a, const QPoly& b);
QPoly operator-(const QPoly& a, const QPoly& b);
QPoly operator*(const QPoly& a, const QPoly& b);
QPoly operator*(const Rat& s, const QPoly& a);
QPoly derivative(const QPoly& p);
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
QPoly monic(const QPoly& p);
QPoly gcd(QPoly a, QPoly b);

// Yun's algorithm: p = c * prod f_k^k with the f_k monic, squarefree and
// pairwise coprime. Only non-constant f_k are returned.
std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& p);

// Integer primitive multiple with positive leading coefficient.
std::vector<Int> primitive_part(const QPoly& p);

// Resultant of binary forms given by coefficient lists (entry i multiplies
// p^i q^(d-i), d = size - 1; leading entries may vanish).
Int form_resultant(const std::vector<Int>& f, const std::vector<Int>& g);

}  // namespace x0
