#pragma once

#include <cstdint>
#include <map>

#include "genk/check.hpp"
#include "genk/clifford.hpp"
#include "genk/exterior.hpp"

namespace genk {

/// Finitely supported Fourier series on T⁴ with modes e^{2πi k·x}.
using FourierForm = std::map<Mode, Form<cd>>;
using FourierVector = std::map<Mode, VecX<cd>>;
using FourierSection = std::map<Mode, GenVector<cd>>;

/// 2πi Σ k_j dx^j, the symbol of d at mode k.
Form<cd> frequency_covector(const Mode& k);
Mode add_modes(const Mode& a, const Mode& b);
/// Largest |k|∞ among the modes present.
int support_radius(const FourierForm& f);
int support_radius(const FourierSection& s);

FourierForm constant_form(const Form<double>& f);
FourierForm fourier_d(const FourierForm& f);
FourierForm fourier_wedge(const FourierForm& a, const FourierForm& b);
FourierForm fourier_contract(const FourierVector& X, const FourierForm& f);
FourierForm operator+(FourierForm a, const FourierForm& b);
FourierForm operator-(FourierForm a, const FourierForm& b);

FourierVector tangent_part(const FourierSection& s);
FourierForm cotangent_part(const FourierSection& s);
FourierSection make_section(const FourierVector& X, const FourierForm& xi);

/// Lie bracket (X·∂)Y − (Y·∂)X.
FourierVector lie_bracket(const FourierVector& X, const FourierVector& Y);
/// [X+ξ, Y+η]_H = [X,Y] + L_Xη − i_Y dξ − i_Y i_X H.
FourierSection courant_bracket_fourier(const FourierSection& v, const FourierSection& w, const FourierForm& H);
/// X + ξ − i_X B.
FourierSection b_transform_fourier(const FourierForm& B, const FourierSection& v);

/// Largest coefficient difference over the union of supports.
double max_difference(const FourierSection& a, const FourierSection& b);
double max_coefficient(const FourierSection& a);

/// B-transform property of the Fourier bracket for random sections and a random single-mode B.
CheckOutcome courant_fourier_check(const Form<double>& H, int radius, std::uint64_t seed, double tol, int samples = 20);

}  // namespace genk
