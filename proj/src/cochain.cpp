#include "nabext/cochain.hpp"

#include <algorithm>
#include <stdexcept>

namespace nabext {

bool MultiIndex::strictly_increasing() const {
    for (std::size_t i = 1; i < indices.size(); ++i)
        if (indices[i - 1] >= indices[i])
            return false;
    return true;
}

std::optional<std::pair<MultiIndex, int>> sort_indices(std::vector<int> ix) {
    int sign = 1;
    // insertion sort, counting transpositions; sizes never exceed a handful
    for (std::size_t i = 1; i < ix.size(); ++i) {
        int v = ix[i];
        std::size_t j = i;
        while (j > 0 && ix[j - 1] > v) {
            ix[j] = ix[j - 1];
            --j;
            sign = -sign;
        }
        ix[j] = v;
    }
    for (std::size_t i = 1; i < ix.size(); ++i)
        if (ix[i - 1] == ix[i])
            return std::nullopt;
    return std::pair{MultiIndex(std::move(ix)), sign};
}

void for_each_combination(int n, int k,
                          const std::function<void(const std::vector<int>&)>& fn) {
    if (k < 0 || k > n)
        return;
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i)
        c[i] = i;
    while (true) {
        fn(c);
        int i = k - 1;
        while (i >= 0 && c[i] == n - k + i)
            --i;
        if (i < 0)
            return;
        ++c[i];
        for (int j = i + 1; j < k; ++j)
            c[j] = c[j - 1] + 1;
    }
}

std::vector<MultiIndex> all_multi_indices(int n, int k) {
    std::vector<MultiIndex> out;
    for_each_combination(n, k, [&](const std::vector<int>& c) { out.push_back(MultiIndex(c)); });
    return out;
}

// A negative arity is allowed and denotes a formal zero: no multi-index can
// key it, so it stays empty. Bracket arithmetic on constants lands there.
Cochain::Cochain(int source_dim, int arity, int target_dim)
    : source_dim_(source_dim), arity_(arity), target_dim_(target_dim) {
    if (source_dim < 0 || target_dim < 0)
        throw std::invalid_argument("Cochain: negative dimension");
}

void Cochain::check_key(const MultiIndex& mi) const {
    if (mi.size() != arity_)
        throw std::invalid_argument("Cochain: multi-index length does not match arity");
    if (!mi.strictly_increasing())
        throw std::invalid_argument("Cochain: multi-index not strictly increasing");
    if (!mi.indices.empty() && (mi.indices.front() < 0 || mi.indices.back() >= source_dim_))
        throw std::invalid_argument("Cochain: multi-index out of range");
}

void Cochain::set_coeff(MultiIndex mi, Vec value) {
    check_key(mi);
    if (int(value.size()) != target_dim_)
        throw std::invalid_argument("Cochain: coefficient length does not match target");
    if (vec_is_zero(value))
        coeffs_.erase(mi);
    else
        coeffs_[std::move(mi)] = std::move(value);
}

void Cochain::add_coeff(const MultiIndex& mi, const Vec& value) {
    check_key(mi);
    if (int(value.size()) != target_dim_)
        throw std::invalid_argument("Cochain: coefficient length does not match target");
    auto it = coeffs_.find(mi);
    if (it == coeffs_.end()) {
        if (!vec_is_zero(value))
            coeffs_[mi] = value;
        return;
    }
    vec_add_to(it->second, value);
    if (vec_is_zero(it->second))
        coeffs_.erase(it);
}

Vec Cochain::coeff(const MultiIndex& mi) const {
    auto it = coeffs_.find(mi);
    return it == coeffs_.end() ? vec_zero(target_dim_) : it->second;
}

Vec Cochain::value_on(const std::vector<int>& ix) const {
    if (int(ix.size()) != arity_)
        throw std::invalid_argument("Cochain::value_on: arity mismatch");
    auto sorted = sort_indices(ix);
    if (!sorted)
        return vec_zero(target_dim_);
    auto it = coeffs_.find(sorted->first);
    if (it == coeffs_.end())
        return vec_zero(target_dim_);
    return sorted->second > 0 ? it->second : vec_neg(it->second);
}

Vec Cochain::value_with_first(const Vec& first, const std::vector<int>& rest) const {
    if (int(first.size()) != source_dim_ || int(rest.size()) + 1 != arity_)
        throw std::invalid_argument("Cochain::value_with_first: shape mismatch");
    Vec r = vec_zero(target_dim_);
    std::vector<int> ix(arity_);
    std::copy(rest.begin(), rest.end(), ix.begin() + 1);
    for (int j = 0; j < source_dim_; ++j) {
        if (first[j].is_zero())
            continue;
        ix[0] = j;
        Vec v = value_on(ix);
        if (!vec_is_zero(v))
            vec_add_to(r, vec_scale(first[j], v));
    }
    return r;
}

Cochain Cochain::operator-() const {
    Cochain r(source_dim_, arity_, target_dim_);
    for (const auto& [mi, v] : coeffs_)
        r.coeffs_[mi] = vec_neg(v);
    return r;
}

Cochain& Cochain::operator+=(const Cochain& o) {
    if (source_dim_ != o.source_dim_ || arity_ != o.arity_ || target_dim_ != o.target_dim_)
        throw std::invalid_argument("Cochain +: shape mismatch");
    for (const auto& [mi, v] : o.coeffs_)
        add_coeff(mi, v);
    return *this;
}

Cochain& Cochain::operator-=(const Cochain& o) { return *this += -o; }

Cochain operator*(const Rational& s, const Cochain& c) {
    Cochain r(c.source_dim_, c.arity_, c.target_dim_);
    if (s.is_zero())
        return r;
    for (const auto& [mi, v] : c.coeffs_)
        r.coeffs_[mi] = vec_scale(s, v);
    return r;
}

Vec eval(const Cochain& c, const std::vector<Vec>& args) {
    if (int(args.size()) != c.arity())
        throw std::invalid_argument("eval: argument count does not match arity");
    for (const auto& a : args)
        if (int(a.size()) != c.source_dim())
            throw std::invalid_argument("eval: argument dimension mismatch");
    Vec r = vec_zero(c.target_dim());
    const int p = c.arity();
    for (const auto& [mi, v] : c.coeffs()) {
        // coefficient of the wedge-basis element: det of the p x p minor
        Matrix minor(p, p);
        for (int a = 0; a < p; ++a)
            for (int b = 0; b < p; ++b)
                minor.at(a, b) = args[a][mi.indices[b]];
        const Rational d = determinant(std::move(minor));
        if (!d.is_zero())
            vec_add_to(r, vec_scale(d, v));
    }
    return r;
}

Cochain ce_differential(const Cochain& c, const ModuleStructure& m) {
    if (m.algebra.dim() != c.source_dim())
        throw std::invalid_argument("ce_differential: module algebra does not match source");
    if (m.space_dim != c.target_dim())
        throw std::invalid_argument("ce_differential: module space does not match target");
    if (int(m.action.size()) != m.algebra.dim())
        throw std::invalid_argument("ce_differential: one action matrix per basis vector required");
    const int n = c.source_dim();
    const int p = c.arity();
    Cochain out(n, p + 1, c.target_dim());
    for_each_combination(n, p + 1, [&](const std::vector<int>& b) {
        Vec val = vec_zero(c.target_dim());
        std::vector<int> rest(p);
        for (int k = 0; k <= p; ++k) {
            for (int t = 0, w = 0; t <= p; ++t)
                if (t != k)
                    rest[w++] = b[t];
            Vec inner = c.value_on(rest);
            if (!vec_is_zero(inner)) {
                Vec acted = m.action[b[k]].apply(inner);
                vec_add_to(val, (k % 2 == 0) ? vec_neg(acted) : acted);  // sign (-1)^(k+1)
            }
        }
        if (p >= 1) {
            std::vector<int> rest2(p - 1);
            for (int k = 0; k <= p; ++k)
                for (int l = k + 1; l <= p; ++l) {
                    const Vec& br = m.algebra.bracket(b[k], b[l]);
                    if (vec_is_zero(br))
                        continue;
                    for (int t = 0, w = 0; t <= p; ++t)
                        if (t != k && t != l)
                            rest2[w++] = b[t];
                    Vec term = c.value_with_first(br, rest2);
                    // sign (-1)^(k+l+1) for 0-based k < l
                    vec_add_to(val, ((k + l) % 2 == 0) ? vec_neg(term) : term);
                }
        }
        out.set_coeff(MultiIndex(b), std::move(val));
    });
    return out;
}

Cochain nr_insertion(const Cochain& p, const Cochain& q) {
    const int n = p.source_dim();
    if (q.source_dim() != n || p.target_dim() != n)
        throw std::invalid_argument("nr_insertion: incomposable dimensions");
    const int a = p.arity();
    const int b = q.arity();
    if (a < 0 || b <= 0)
        return Cochain(n, a + b - 1, q.target_dim());
    const int r = a + b - 1;
    Cochain out(n, r, q.target_dim());
    std::vector<int> s(a), rest(b - 1);
    for_each_combination(n, r, [&](const std::vector<int>& full) {
        Vec val = vec_zero(q.target_dim());
        for_each_combination(r, a, [&](const std::vector<int>& pos) {
            // sign of the unshuffle sending 0..r-1 to (pos, complement)
            int exp = 0;
            for (int k = 0; k < a; ++k) {
                s[k] = full[pos[k]];
                exp += pos[k] - k;
            }
            Vec inner = p.coeff(MultiIndex(s));
            if (vec_is_zero(inner))
                return;
            for (int t = 0, w = 0, k = 0; t < r; ++t) {
                if (k < a && pos[k] == t)
                    ++k;
                else
                    rest[w++] = full[t];
            }
            Vec term = q.value_with_first(inner, rest);
            if (!vec_is_zero(term))
                vec_add_to(val, (exp % 2 == 0) ? term : vec_neg(term));
        });
        out.set_coeff(MultiIndex(full), std::move(val));
    });
    return out;
}

Cochain nr_bracket(const Cochain& p, const Cochain& q) {
    if (p.target_dim() != p.source_dim() || q.target_dim() != q.source_dim())
        throw std::invalid_argument("nr_bracket: cochains must be valued in their source");
    Cochain left = nr_insertion(p, q);
    Cochain right = nr_insertion(q, p);
    const long dp = p.arity() - 1, dq = q.arity() - 1;
    const bool odd = ((dp * dq) % 2) != 0;
    return odd ? left + right : left - right;
}

Cochain bracket_cochain(const LieAlgebra& l) {
    Cochain c(l.dim(), 2, l.dim());
    for (int i = 0; i < l.dim(); ++i)
        for (int j = i + 1; j < l.dim(); ++j)
            c.set_coeff(MultiIndex({i, j}), l.bracket(i, j));
    return c;
}

Bigrade bigrade_of(const MultiIndex& mi, int dim_g) {
    Bigrade b;
    for (int i : mi.indices)
        (i < dim_g ? b.m : b.n) += 1;
    return b;
}

BigradeDecomposition bigrade_decompose(const Cochain& c, int dim_g) {
    if (c.target_dim() != c.source_dim())
        throw std::invalid_argument("bigrade_decompose: target is not the split source");
    const int dim_h = c.source_dim() - dim_g;
    if (dim_g < 0 || dim_h < 0)
        throw std::invalid_argument("bigrade_decompose: split exceeds source dimension");
    BigradeDecomposition out;
    out.positive.dim_g = dim_g;
    out.positive.dim_h = dim_h;
    for (const auto& [mi, v] : c.coeffs()) {
        for (int k = 0; k < dim_g; ++k)
            if (!v[k].is_zero())
                throw std::invalid_argument("bigrade_decompose: target not the h-block");
        Vec hv(v.begin() + dim_g, v.end());
        const Bigrade b = bigrade_of(mi, dim_g);
        if (b.m >= 1) {
            auto it = out.positive.components
                          .try_emplace(b, Cochain(c.source_dim(), c.arity(), dim_h))
                          .first;
            it->second.set_coeff(mi, std::move(hv));
        } else {
            auto it = out.zero_column
                          .try_emplace(b.n, Cochain(c.source_dim(), c.arity(), dim_h))
                          .first;
            it->second.set_coeff(mi, std::move(hv));
        }
    }
    return out;
}

Cochain embed_h_valued(const Cochain& component, int dim_g) {
    if (component.target_dim() + dim_g != component.source_dim())
        throw std::invalid_argument("embed_h_valued: target is not the h-block of the source");
    Cochain out(component.source_dim(), component.arity(), component.source_dim());
    for (const auto& [mi, v] : component.coeffs()) {
        Vec full = vec_zero(component.source_dim());
        for (std::size_t k = 0; k < v.size(); ++k)
            full[dim_g + k] = v[k];
        out.set_coeff(mi, std::move(full));
    }
    return out;
}

Cochain bigrade_assemble(const BigradedCochain& bc, const std::map<int, Cochain>& zero_column) {
    const int n = bc.dim_g + bc.dim_h;
    int arity = 0;
    for (const auto& entry : bc.components)
        arity = entry.second.arity();
    for (const auto& entry : zero_column)
        arity = entry.second.arity();
    Cochain out(n, arity, n);
    for (const auto& entry : bc.components)
        out += embed_h_valued(entry.second, bc.dim_g);
    for (const auto& entry : zero_column)
        out += embed_h_valued(entry.second, bc.dim_g);
    return out;
}

}  // namespace nabext
