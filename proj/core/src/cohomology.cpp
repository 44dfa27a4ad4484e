#include "twotype/cohomology.hpp"

#include "twotype/error.hpp"

namespace tt {

Cohomology::Cohomology(ModuleRef m, int n, long long bound) : m_(std::move(m)), n_(n) {
    if (n < 0) raise(ErrorKind::BadDegree, "negative degree");
    const long long k = m_->coeff.rank();
    const long long rows = static_cast<long long>(normalized_tuples(*m_, n + 1)) * k;
    const long long cols = static_cast<long long>(normalized_tuples(*m_, n)) * k;
    const long long prev = n > 0 ? static_cast<long long>(normalized_tuples(*m_, n - 1)) * k : 0;
    if (rows * cols > bound || cols * prev > bound)
        raise(ErrorKind::TooLarge, "cochain matrices exceed " + std::to_string(bound) + " entries");
    cn_ = cochain_group(*m_, n);
    FinAbGroup next = cochain_group(*m_, n + 1);
    d_ = AbHom{cn_, next, differential_matrix(*m_, n)};
    cocycles_ = ab_kernel(d_);
    std::vector<AbElem> bounds;
    if (n > 0) {
        FinAbGroup before = cochain_group(*m_, n - 1);
        AbHom dp{before, cn_, differential_matrix(*m_, n - 1)};
        for (int j = 0; j < before.rank(); ++j) bounds.push_back(*cocycles_.coords(dp(before.basis(j))));
    }
    classes_ = ab_quotient(cocycles_.group, bounds);
    h_ = classes_.group;
    for (int i = 0; i < h_.rank(); ++i) gens_.push_back(representative(h_.basis(i)));
}

bool Cohomology::is_cocycle(const Cochain& z) const { return differential(z).is_zero(); }

AbElem Cohomology::classify(const Cochain& z) const {
    if (z.degree() != n_) raise(ErrorKind::BadDegree, "degree mismatch");
    auto c = cocycles_.coords(to_coords(z));
    if (!c) raise(ErrorKind::NotACocycle, "cochain is not closed");
    return classes_.proj(*c);
}

std::optional<Cochain> Cohomology::witness(const Cochain& z) const {
    if (n_ == 0) return std::nullopt;
    auto c = cocycles_.coords(to_coords(z));
    if (!c) return std::nullopt;
    auto sol = classes_.solve(*c);
    if (!sol) return std::nullopt;
    FinAbGroup before = cochain_group(*m_, n_ - 1);
    AbElem b = before.zero();
    for (int j = 0; j < before.rank(); ++j) b[j] = (*sol)[j];
    return from_coords(m_, n_ - 1, before.reduce(b));
}

Cochain Cohomology::representative(const AbElem& cls) const {
    return from_coords(m_, n_, cocycles_.incl(classes_.lift(cls)));
}

bool Cohomology::cohomologous(const Cochain& a, const Cochain& b) const {
    return h_.is_zero(classify(a - b));
}

} // namespace tt
