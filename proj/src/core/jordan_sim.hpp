#ifndef EXALG_JORDAN_SIM_HPP
#define EXALG_JORDAN_SIM_HPP

#include <array>
#include <optional>
#include <string>

#include "core/albert.hpp"
#include "core/kernel.hpp"

namespace exalg {

/// Multiplier of the map when N(m(v)) = alpha N(v) identically (checked via
/// the polarized cubic form on all symmetric basis triples); nullopt
/// otherwise.
std::optional<Rational> is_jordan_similitude(const ExactMatrix& m27);

struct JordanSimilitude {
    ExactMatrix map;
    Rational multiplier;
};

struct RelatedTripleCandidate {
    OctonionSimilitude t0, t1, t2;
};

struct MultiplierMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The block map (d0,d1,d2; o0,o1,o2) -> (a0 d0, a1 d1, a2 d2; t0 o0, t1 o1,
/// t2 o2). Returns it as a similitude with multiplier a0*a1*a2 iff the
/// candidate triple is related (the similitude predicate accepts); nullopt
/// otherwise.
///
/// Precondition (throws MultiplierMismatch): each t_i is a similitude with
/// multiplier (a0 a1 a2) / a_i. The cubic norm pairs each diagonal scalar
/// with the norm of the opposite off-diagonal slot, so that scaling pattern
/// is forced on any block similitude sending 1 to diag(a0, a1, a2).
std::optional<JordanSimilitude> lemma_similitude(const std::array<Rational, 3>& alpha,
                                                 const RelatedTripleCandidate& triple);

/// Slot assignment of the Moufang family, resolved by calibration. Slot
/// maps are words over the four one-sided multiplications
/// {x -> ux, x -> xu, x -> conj(u)x, x -> x conj(u)} (letters 0..3), applied
/// left to right: slot 0 holds a length-2 word (multiplier n^2), slots 1 and
/// 2 hold length-3 words (multiplier n^3), matching the scaling pattern the
/// cubic norm forces for the diagonal (n^2, n, n).
struct MoufangSlots {
    std::array<int, 3> word;  // slot 0 in [0,16), slots 1..2 in [0,64)
};
const MoufangSlots& moufang_slots();

/// The word map for the octonion u (length 2 or 3, base-4 digit encoding,
/// most significant digit applied first), with its norm multiplier.
OctonionSimilitude moufang_word_map(const Octonion& u, int word, int length);
std::string moufang_word_name(int word, int length);

/// The calibrated related triple for an invertible octonion u, together with
/// its multipliers.
RelatedTripleCandidate moufang_triple(const Octonion& u);
std::array<Rational, 3> moufang_alphas(const Octonion& u);

enum class LieAmbient { EndJPlusMultiplier, EndBPlusMultiplier };

/// A computed Lie subalgebra: basis vectors in ambient coordinates
/// (map entries flattened row*dim + col, then the multiplier component).
struct LieSubalgebraReport {
    std::string name;
    LieAmbient ambient = LieAmbient::EndJPlusMultiplier;
    KernelBasis basis;
    std::size_t dimension() const { return basis.dimension(); }
};

struct LieOptions {
    KernelStrategy strategy = KernelStrategy::MultiModular;
    int prime_budget = 4;
    std::uint64_t seed = 0;
    int threads = 1;
};

/// Derivations of the Jordan product: D(x∘y) = D(x)∘y + x∘D(y) over all
/// symmetric basis pairs (10206 equations, 729 unknowns). Expected dim 52.
LieSubalgebraReport derivation_algebra(const LieOptions& opts = {});

/// Infinitesimal similitudes of the cubic norm: N3(gx,y,z) + N3(x,gy,z) +
/// N3(x,y,gz) = lambda N3(x,y,z) on all symmetric basis triples (3654
/// equations, 730 unknowns). Expected dim 79.
LieSubalgebraReport similitude_algebra(const LieOptions& opts = {});

struct StabilizerTable {
    LieSubalgebraReport stab_diag;   // {g in Sim : g(e_i) in L}
    LieSubalgebraReport stab_lines;  // {g in Sim : g(e_i) in <e_i>}
    LieSubalgebraReport aut_lv;      // {D in Der : D(e_i) in L}
    LieSubalgebraReport stab_one;    // {g in Sim : g(1) = 0}
    bool stab_diag_equals_stab_lines = false;
    bool stab_one_equals_derivations = false;
};

StabilizerTable stabilizer_dimensions(const LieSubalgebraReport& der,
                                      const LieSubalgebraReport& sim);

/// Cuts a parent subalgebra by sparse linear conditions on ambient
/// coordinates (exact small kernel).
LieSubalgebraReport restrict_subspace(
    const std::string& name, const LieSubalgebraReport& parent,
    const std::vector<std::vector<std::pair<std::uint32_t, Rational>>>& conditions);

/// span(a) as subspace of span(b); both in the same ambient.
bool subspace_contained(const std::vector<std::vector<Rational>>& a,
                        const std::vector<std::vector<Rational>>& b);

struct CubicSubalgebra {
    bool regular = false;
    std::size_t dimension = 0;
    std::vector<AlbertElement> basis;  // independent members of {1, x, x∘x}
};

/// Span of {1, x, x∘x}; x is regular iff the span has dimension 3.
CubicSubalgebra cubic_subalgebra_from_regular(const AlbertElement& x);

std::string lie_report_json(const LieSubalgebraReport& report, bool include_basis);

}  // namespace exalg

#endif
