#pragma once

#include "torus/algebra/factored.hpp"
#include "torus/algebra/laurent.hpp"
#include "torus/partitions.hpp"

/// Closed-form Macdonald ingredients over the alphabet (q, t, A), A = t^N.
namespace torus::macdonald {

using algebra::FactoredRational;
using algebra::LaurentPolynomial;
using algebra::Monomial;

/// Index of each variable in VarAlphabet::macd().
inline constexpr std::size_t kQ = 0;
inline constexpr std::size_t kT = 1;
inline constexpr std::size_t kA = 2;

/// q^a t^b A^c over the (q, t, A) alphabet.
Monomial qtA(int q_exp, int t_exp, int a_exp = 0);

/// t^i / q^j for a cell (i, j).
Monomial cell_weight(Cell c);

/// T_Y = prod over cells of t^i / q^j. Cross-checked against the closed
/// exponent form; throws IntegrityError if the two disagree.
Monomial framing(const Partition& y);

/// t^{sum (Y_i + Yt_i^2)/2} q^{-sum (Y_i + Y_i^2)/2}. Throws IntegrityError if
/// either exponent sum is odd.
Monomial framing_closed_form(const Partition& y);

/// r-th elementary symmetric polynomial of the cell weights. Zero for r > |Y|.
LaurentPolynomial gamma(const Partition& y, int r);

/// All of e_0 .. e_|Y| of the cell weights, index r holding e_r.
std::vector<LaurentPolynomial> gamma_all(const Partition& y);

/// Principal specialization M_Y(1, t, ..., t^{N-1}) with t^N written as A:
/// t^{sum (Yt_i^2 - Y_i)/2} prod (1 - A t^{1-i} q^{j-1}) / (1 - t^{leg+1} q^{arm}).
FactoredRational dimension(const Partition& y);

/// Cauchy norm m_Y = prod (1 - t^{leg+1} q^{arm}) / (1 - t^{leg} q^{arm+1}).
FactoredRational cauchy_norm(const Partition& y);

/// Coefficient C_Y of P_Y in the power sum p_|Y|:
/// (1 - q^n) t^{sum (Yt_i^2 - Y_i)/2} prod_{cells != (1,1)} (1 - t^{1-i} q^{j-1})
///   / prod (1 - t^{leg} q^{arm+1}).
FactoredRational expansion_coefficient(const Partition& y);

}  // namespace torus::macdonald
