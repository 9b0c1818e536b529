#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "amalgam/constructors.hpp"
#include "amalgam/ideal.hpp"
#include "amalgam/localization.hpp"
#include "amalgam/ring.hpp"

namespace amalgam {

struct AmalgamationSpec {
  RingHom f;
  Ideal b;
  const Ring& A() const { return f.source(); }
  const Ring& B() const { return f.target(); }
};

/// A ⋈^f b = {(a, f(a) + β) : a ∈ A, β ∈ b} as a subring of A × B, carrier
/// elements in ambient index order.
struct AmalgamatedRing {
  AmalgamationSpec spec;
  ProductRing ambient;
  Subring sub;  // carrier inside the ambient product
  std::vector<std::pair<Elem, Elem>> pair_of;
  RingHom iota;  // A -> carrier, a |-> (a, f(a))
  RingHom pA;
  RingHom pB;
  Subring image_B;  // f(A) + b inside B
  QuotientRing gamma_target;  // (f(A) + b) / b
  RingHom gamma;
  Ideal preimage_b;  // f^{-1}(b) in A
  Ideal b0;          // {0} × b in the carrier
  Ideal conductor_ambient;  // f^{-1}(b) × b in A × B
  Ideal conductor;          // the same set as an ideal of the carrier

  const Ring& carrier() const { return sub.ring; }
  const Ring& A() const { return spec.A(); }
  const Ring& B() const { return spec.B(); }
  const Ideal& b() const { return spec.b; }
  /// Carrier element (a, y); throws if the pair is not in the carrier.
  Elem element(Elem a, Elem y) const;
};

/// Checks every structural invariant of the construction before returning.
AmalgamatedRing build_amalgamation(const RingHom& f, const Ideal& b, const Budget& budget = {});
/// A ⋈ a = A ⋈^{id} a.
AmalgamatedRing duplication(const Ideal& a, const Budget& budget = {});

/// One verified isomorphism claim.
struct IsoCheck {
  std::string claim;
  std::string path;  // "canonical" or "search"
  bool ok = false;
  std::string detail;
};

/// R / I -> target induced by h; ok iff well defined, injective and onto.
IsoCheck check_induced_isomorphism(std::string claim, const Ideal& i, const RingHom& h, const Budget& budget = {});

/// a ⋈^f b = pA^{-1}(a); asserts carrier / (a ⋈^f b) ≅ A / a canonically.
Ideal ideal_join(const AmalgamatedRing& m, const Ideal& a, const Budget& budget = {});

struct QuotientIsoReport {
  std::vector<IsoCheck> checks;
  bool ok() const;
};
/// carrier/b0 ≅ A, carrier/(f^{-1}(b) × 0) ≅ f(A)+b, carrier/(f^{-1}(b) × b)
/// ≅ (f(A)+b)/b ≅ A/f^{-1}(b), and ≅ B/b when f is onto.
QuotientIsoReport quotient_isos_check(const AmalgamatedRing& m, const Budget& budget = {});

/// ρ ×_C σ = {(a, b) : ρ(a) = σ(b)}.
struct FiberProduct {
  RingHom rho;
  RingHom sigma;
  ProductRing ambient;
  Subring sub;
  std::vector<std::pair<Elem, Elem>> pair_of;
  RingHom pA;
  RingHom pB;
  const Ring& carrier() const { return sub.ring; }
};
FiberProduct build_fiber_product(const RingHom& rho, const RingHom& sigma, const Budget& budget = {});

struct FiberIdentityCheck {
  bool equal = false;
  std::size_t fiber_size = 0;
  std::size_t amalg_size = 0;
  /// First ambient pair in one carrier but not the other.
  std::optional<std::pair<Elem, Elem>> witness;
};
/// Compares A ⋈^f b with (π∘f) ×_{B/b} π inside A × B, element for element.
FiberIdentityCheck fiberproduct_identity_check(const AmalgamatedRing& m, const Budget& budget = {});

/// p'^f; checks primality and that maximality transfers.
Ideal prime_lift(const AmalgamatedRing& m, const Ideal& p);
/// q̄^f for a prime q of B with b ⊄ q; throws InvalidArgument otherwise.
Ideal prime_bar(const AmalgamatedRing& m, const Ideal& q);

struct TransferredPrime {
  Ideal source;  // prime of A (lift) or of B (bar)
  Ideal image;   // prime of the carrier
  bool maximal = false;
};

struct SpectrumTransferReport {
  SpectrumView direct;
  std::vector<TransferredPrime> lifts;
  std::vector<TransferredPrime> bars;
  bool sets_equal = false;
  bool lift_image_is_V_b0 = false;
  bool lift_order_iso = false;
  bool bar_order_iso = false;
  bool max_formula = false;
  std::size_t max_from_lifts = 0;
  std::size_t max_from_bars = 0;
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};
SpectrumTransferReport spectrum_transfer(const AmalgamatedRing& m, const Budget& budget = {});

struct LocalityCheck {
  bool direct = false;     // one maximal ideal in the carrier
  bool criterion = false;  // A local and b ⊆ Jac(B)
  bool agree() const { return direct == criterion; }
};
LocalityCheck is_local_amalg(const AmalgamatedRing& m, const Budget& budget = {});

struct LocalizedAmalgData {
  Ideal p;
  MultiplicativeSet S_p;  // f(A \ p) + b
  LocalizedRing A_p;
  LocalizedRing B_Sp;
  RingHom f_p;
  Ideal b_Sp;
  bool B_Sp_zero = false;
  bool f_p_surjective = false;
  bool b_Sp_zero = false;
  /// f^{-1}(b) A_p = 0
  bool preimage_local_zero = false;
};
/// Builds the data at a prime of A and asserts the fraction identities:
/// f_p^{-1}(b B_Sp) = f^{-1}(b) A_p, d B_Sp = B_Sp iff f^{-1}(b + d) meets A \ p
/// for every ideal d of B, and B_Sp = 0 iff f^{-1}(b) meets A \ p.
LocalizedAmalgData localized_data(const AmalgamatedRing& m, const Ideal& p, const Budget& budget = {});

struct LocalizationIsoReport {
  Ideal prime;          // prime of the carrier
  std::string branch;   // "lift" or "bar"
  Ideal source;         // p of A or q of B
  IsoCheck iso;
  bool zero_branch = false;  // B_Sp = 0
  std::optional<IsoCheck> degenerate;  // carrier_P ≅ A_p when B_Sp = 0
  bool ok() const { return iso.ok && (!degenerate || degenerate->ok); }
};
LocalizationIsoReport localize_amalg_at_prime(const AmalgamatedRing& m, const Ideal& P, const Budget& budget = {});
std::vector<LocalizationIsoReport> localize_amalg_everywhere(const AmalgamatedRing& m, const Budget& budget = {});

/// I is proper and I + (x) = R for every x outside I.
bool is_maximal_ideal(const Ideal& i);

}  // namespace amalgam
