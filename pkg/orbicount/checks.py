import collections

Check = collections.namedtuple('Check', ['identity', 'equation', 'inputs', 'lhs', 'rhs', 'passed'])

# identity id -> the equation its two sides instantiate
EQUATIONS = {
    'euler-product': 'Σ_n χ_Γ(M^n; G wr S_n) p^n = Π_[H] (1 - p^[Γ:H])^(-χ_[Γ/H](M; G))',
    'burnside-equivalence': 'χ_Γ(M; G) = (1/|G|) Σ_g #{(θ, x) : gθg^-1 = θ, gx = x, x ∈ M^<θ>}',
    'hecke-form': 'Σ_n χ_Γ(M^n; G wr S_n) p^n = Π_r (1 - p^r)^(-Σ_[Γ:H]=r χ_[Γ/H](M; G))',
    'abelian-subgroups': 'Σ_n χ_Γ(M^n; G wr S_n) p^n = Π_(H ≤ Γ) (1 - p^[Γ:H])^(-χ_H(M; G))',
    'symmetric-product': 'Σ_n χ(M^n; G wr S_n) p^n = Π_r (1 - p^r)^(-χ(M; G))',
    'rho-class-double-count': 'Σ_[ρ] #(M^<ρ> / π_G(T_ρ)) = #({(ρ, x) : x ∈ M^<ρ>} / (N_Γ(H)/H x G))',
    'centralizer-order': '|C_(G wr S_n)(θ)| = Π_(H,[ρ]) |Aut(H, ρ)|^m(H,[ρ]) · m(H,[ρ])!',
    'degree-count': 'Σ_(H,[ρ]) m(H,[ρ]) · [Γ:H] = n',
    'conjugation-invariance': 'decomposition(gθg^-1) = decomposition(θ)',
    'hall-count': 'a_n(F_k) = n (n!)^(k-1) - Σ_(i<n) ((n-i)!)^(k-1) a_i(F_k)',
    'transitive-action-count': 'a_n(F_k) = #{transitive (σ_1, ..., σ_k) ∈ S_n^k} / (n-1)!',
    'class-reconstruction': 'a_n(Γ) = Σ_[H] [Γ:H] / |N_Γ(H)/H|',
    'sigma-count': '#{L ≤ Z^2 : [Z^2:L] = n} = σ_1(n)',
    'presented-lattice-count': '#{H ≤ <a, b | aba^-1b^-1> : index n} / conjugacy = σ_1(n)',
    'lattice-hecke': 'T(m)T(n) = Σ_(d | (m, n)) d · R(d)T(mn/d^2)',
    'hecke-commute': 'T(m)T(n) = T(n)T(m)',
    'scale-commute': 'R(d)T(n) = T(n)R(d)',
    'sublattice-count': '#T(n) = σ_1(n)',
    'functor-hecke': '(T(m)T(n)F)(T) = Σ_(d | (m, n)) d · (T(mn/d^2)R(d)F)(T)',
    'deck-triviality': 'Γ/L acts trivially on C_L(M/G) for every evaluated L',
    'functor-euler-hecke': '(T(n)F)(T) = Σ_([Γ:L] = n) χ_[Γ/L](M; G)',
    'functor-divisor-sum': '(T(n)F)(T) = σ_1(n) · χ_(Z^2)(M; G)',
    'functor-coprime': 'T(m)T(n)F = T(mn)F for (m, n) = 1',
    'functor-prime-power': 'T(p)T(p^r)F = T(p^(r+1))F + p · T(p^(r-1))R(p)F',
    'dmvv-equivalence': 'Π_(n>0, m≥0, l) (1 - p^n q^m y^l)^(-c(nm, l)) = exp(Σ_(n>0) p^n T(n) χ(q, y))',
    'dmvv-integrality': 'exp(Σ_(n>0) p^n T(n) χ(q, y)) ∈ Z[[p, q, y, y^-1]]',
    'partition-product': 'Π_(n>0) (1 - p^n)^(-1) = Σ_n p(n) p^n',
    'partition-exponential': 'exp(Σ_(n>0) p^n T(n) 1) = Σ_n p(n) p^n',
    'partition-class-count': '#{conjugacy classes of S_n} = χ_Z(pt; S_n) = p(n)',
    'euler-specialization': 'Π_(n>0, m≥0, l) (1 - p^n q^m y^l)^(-c(nm, l)) = Π_(n>0) (1 - p^n)^(-e) for c = e·δ_(0,0)',
}


def compare(identity, inputs, lhs, rhs):
    """A Check record whose verdict is plain equality of the two sides."""
    return Check(identity, EQUATIONS.get(identity), inputs, lhs, rhs, lhs == rhs)


def all_passed(checks):
    return all(check.passed for check in checks)
