#include "ffvar/dirichlet.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace ffvar {

ResidueGroup::ResidueGroup(const Fq& fq, Poly Q) : fq_(&fq), Q_(std::move(Q)) {
    poly_trim(fq, Q_);
    if (!poly_is_monic(fq, Q_) || poly_deg(Q_) < 1)
        throw config_error("Q must be monic non-constant");
    if (!poly_is_squarefree(fq, Q_))
        throw config_error("Q must be square-free");
    for (auto& [pi, mult] : poly_factor(fq, Q_)) {
        if (mult != 1) throw config_error("Q must be square-free");
        int d = poly_deg(pi);
        FqExt field(fq, d, pi);
        if (!field.has_tables())
            throw resource_error("residue field exceeds the log-table limit");
        std::uint64_t order = field.size() - 1;
        phi_ *= order;
        lcm_ = std::lcm(lcm_, order);
        factors_.push_back(Factor{std::move(pi), d, std::move(field), order});
    }
    if (lcm_ <= 1u << 20) {
        roots_.resize(lcm_);
        for (std::uint64_t k = 0; k < lcm_; ++k) {
            double ang = 2.0 * std::numbers::pi * double(k) / double(lcm_);
            roots_[k] = {std::cos(ang), std::sin(ang)};
        }
    }
}

elem ResidueGroup::reduce(const Poly& f, size_t j) const {
    const Factor& fac = factors_[j];
    Poly r = poly_mod(*fq_, f, fac.pi);
    r.resize(fac.d, fq_->zero());
    return fac.field.encode(r.data());
}

bool ResidueGroup::unit_logs(const Poly& f, std::vector<std::uint64_t>& out) const {
    out.resize(factors_.size());
    for (size_t j = 0; j < factors_.size(); ++j) {
        elem r = reduce(f, j);
        if (r == 0) return false;
        out[j] = factors_[j].field.log(r);
    }
    return true;
}

std::uint64_t ResidueGroup::residue_index(const Poly& f) const {
    Poly r = poly_mod(*fq_, f, Q_);
    std::uint64_t q = fq_->size(), idx = 0;
    for (size_t i = r.size(); i-- > 0;) idx = idx * q + r[i];
    return idx;
}

Poly ResidueGroup::residue_poly(std::uint64_t index) const {
    std::uint64_t q = fq_->size();
    Poly r;
    for (int i = 0; i < poly_deg(Q_); ++i) {
        r.push_back(index % q);
        index /= q;
    }
    poly_trim(*fq_, r);
    return r;
}

bool ResidueGroup::is_unit_index(std::uint64_t index) const {
    Poly r = residue_poly(index);
    for (size_t j = 0; j < factors_.size(); ++j)
        if (reduce(r, j) == 0) return false;
    return true;
}

cplx ResidueGroup::root_of_unity(std::uint64_t k) const {
    if (!roots_.empty()) return roots_[k];
    double ang = 2.0 * std::numbers::pi * double(k) / double(lcm_);
    return {std::cos(ang), std::sin(ang)};
}

Character character_at(const ResidueGroup& group, std::uint64_t index) {
    if (index >= group.phi()) throw config_error("character index out of range");
    Character chi{&group, index, {}};
    std::uint64_t rest = index;
    for (const auto& fac : group.factors()) {
        chi.exponents.push_back(rest % fac.order);
        rest /= fac.order;
    }
    return chi;
}

Character conjugate_character(const Character& chi) {
    const ResidueGroup& group = *chi.group;
    std::uint64_t index = 0, radix = 1;
    for (size_t j = 0; j < group.factors().size(); ++j) {
        std::uint64_t ord = group.factors()[j].order;
        std::uint64_t k = chi.exponents[j] == 0 ? 0 : ord - chi.exponents[j];
        index += k * radix;
        radix *= ord;
    }
    return character_at(group, index);
}

cplx chi_on_logs(const Character& chi, const std::vector<std::uint64_t>& logs) {
    const ResidueGroup& group = *chi.group;
    std::uint64_t L = group.exponent_lcm();
    unsigned __int128 e = 0;
    for (size_t j = 0; j < logs.size(); ++j) {
        std::uint64_t ord = group.factors()[j].order;
        e += static_cast<unsigned __int128>(chi.exponents[j] % ord) * (logs[j] % ord) % ord * (L / ord);
    }
    return group.root_of_unity(static_cast<std::uint64_t>(e % L));
}

cplx chi_zero(const Character& chi, const Poly& f) {
    std::vector<std::uint64_t> logs;
    if (!chi.group->unit_logs(f, logs)) return {0.0, 0.0};
    return chi_on_logs(chi, logs);
}

}  // namespace ffvar
