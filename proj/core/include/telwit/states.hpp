// State families, maximally entangled projectors and random test states.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "telwit/qmat.hpp"
#include "telwit/rng.hpp"

namespace telwit {

enum class FamilyKind { werner, mems, qutrit_nme };

std::string_view to_string(FamilyKind kind);
/// Accepts "werner", "mems", "qutrit_nme"; throws Error otherwise.
FamilyKind parse_family_kind(std::string_view name);
/// Local dimension d of the family's d×d system.
int family_local_dim(FamilyKind kind);

struct StateFamily {
  FamilyKind kind;
  double p;  // visibility in [0, 1]
};

/// (1/√d) Σ_i |i⟩|i⟩.
ComplexVector phi_plus(int d);

/// P_U = (I⊗U)|Φ_d⁺⟩⟨Φ_d⁺|(I⊗U†).
HermitianOperator max_entangled_projector(int d, const UnitaryMatrix& u);

/// (I⊗U)|Φ_d⁺⟩, the unit vector whose projector is P_U.
ComplexVector max_entangled_vector(int d, const UnitaryMatrix& u);

/// p·P₀ + (1−p)·I/4 on two qubits.
DensityMatrix werner(double p);

/// Rank-3 two-qubit family λ₁|ψ⁻⟩⟨ψ⁻| + λ₂|00⟩⟨00| + λ₃|ψ⁺⟩⟨ψ⁺| with
/// λ₁ = (1+2p)/3, λ₂ = λ₃ = (1−p)/3 and |ψ^±⟩ = (|01⟩ ± |10⟩)/√2.
DensityMatrix mems(double p);

/// (|01⟩⟨01| + |12⟩⟨12| + |20⟩⟨20|)/3 on two qutrits.
DensityMatrix sigma_plus();

/// √(2/3)|00⟩ + √(1/6)|11⟩ + √(1/6)|22⟩.
ComplexVector psi_nme();

/// p|Ψ_NME⟩⟨Ψ_NME| + (1−p)σ₊.
DensityMatrix qutrit_nme(double p);

DensityMatrix make_state(const StateFamily& family);

/// Hilbert–Schmidt random state G·G†/Tr(G·G†) on C^d ⊗ C^d.
DensityMatrix random_density(int d, Rng& rng);
DensityMatrix random_density(int d, std::uint64_t seed);

/// Bell-type vectors on two qubits used by the MEMS family.
ComplexVector psi_minus();
ComplexVector psi_plus();

}  // namespace telwit
