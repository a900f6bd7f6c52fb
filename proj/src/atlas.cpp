#include "idens/atlas.hpp"

#include "idens/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace idens::atlas {

std::string to_string(Which which) { return which == Which::PSL ? "PSL" : "PGL"; }

std::string to_string(NormalizerShape shape) {
    switch (shape) {
        case NormalizerShape::Dihedral: return "Dihedral";
        case NormalizerShape::AffineType: return "AffineType";
        case NormalizerShape::Other: return "Other";
    }
    return "Other";
}

GroupTable::GroupTable(std::shared_ptr<const gfq::Field> field, Which which)
    : pgl_(std::move(field)), which_(which) {
    const auto& f = pgl_.field();
    const std::uint64_t q = f.q();
    index_.assign(q * q * q * q, -1);

    // Normalized forms in increasing encoding order: [[0,1],[c,d]] with c != 0,
    // then [[1,b],[c,d]] with d != bc.
    auto push = [&](const pgl2::Matrix2& m) {
        const ProjectiveElement g = pgl_.normalize(m);
        const bool psl = pgl_.in_psl(g);
        if (which_ == Which::PSL && !psl) return;
        index_[pgl_.encode(g)] = static_cast<std::int32_t>(elements_.size());
        elements_.push_back(g);
        psl_mask_.push_back(psl);
    };
    for (pgl2::Code c = 1; c < q; ++c)
        for (pgl2::Code d = 0; d < q; ++d) push({0, 1, c, d});
    for (pgl2::Code b = 0; b < q; ++b)
        for (pgl2::Code c = 0; c < q; ++c)
            for (pgl2::Code d = 0; d < q; ++d)
                if (d != f.mul(b, c)) push({1, b, c, d});

    identity_ = lookup(pgl_.identity());
    inverse_.resize(elements_.size());
    order_.resize(elements_.size());
    for (std::uint32_t i = 0; i < size(); ++i) {
        inverse_[i] = lookup(pgl_.inv(elements_[i]));
        order_[i] = pgl_.order(elements_[i]);
    }

    const std::uint32_t h = index_of(pgl_.normalize(pgl2::canonical_h_matrix(f)));
    std::vector<bool> seen(size(), false);
    for (std::uint32_t g = 0; g < size(); ++g) {
        const std::uint32_t x = conj(g, h);
        if (!seen[x]) {
            seen[x] = true;
            class_of_h_.push_back(x);
        }
    }
    std::sort(class_of_h_.begin(), class_of_h_.end());
}

std::optional<std::uint32_t> GroupTable::find(const ProjectiveElement& g) const {
    const std::uint64_t code = pgl_.encode(g);
    if (code >= index_.size() || index_[code] < 0) return std::nullopt;
    return static_cast<std::uint32_t>(index_[code]);
}

std::uint32_t GroupTable::index_of(const ProjectiveElement& g) const {
    const auto i = find(g);
    require(i.has_value(), Errc::InvalidArgument,
            "element " + pgl_.serialize(g) + " is not in " + to_string(which_));
    return *i;
}

std::shared_ptr<const GroupTable> enumerate_group(std::shared_ptr<const gfq::Field> field,
                                                  Which which, std::uint64_t max_order) {
    const std::uint64_t q = field->q();
    const std::uint64_t order = (q - 1) * q * (q + 1);
    require(order <= max_order, Errc::TooLarge,
            "PGL(2," + std::to_string(q) + ") has " + std::to_string(order) +
                " elements, above the enumeration bound");
    return std::make_shared<const GroupTable>(std::move(field), which);
}

std::uint32_t canonical_h(const GroupTable& table) {
    return table.index_of(table.pgl().normalize(pgl2::canonical_h_matrix(table.field())));
}

std::uint32_t find_inverting_involution(const GroupTable& table, std::uint32_t h) {
    require(table.order(h) == 3, Errc::InvalidArgument, "h must have order 3");
    const std::uint32_t h_inv = table.inv(h);
    for (std::uint32_t g = 0; g < table.size(); ++g)
        if (table.order(g) == 2 && !table.in_psl(g) && table.conj(g, h) == h_inv) return g;
    fail(Errc::NoSuchInvolution, "no involution outside PSL inverts h for q = " +
                                     std::to_string(table.q()));
}

std::vector<bool> conjugacy_closure(const GroupTable& table, std::span<const std::uint32_t> subset,
                                    Which conjugators) {
    std::vector<bool> mask(table.size(), false);
    for (std::uint32_t g = 0; g < table.size(); ++g) {
        if (conjugators == Which::PSL && !table.in_psl(g)) continue;
        for (auto s : subset) mask[table.conj(g, s)] = true;
    }
    return mask;
}

CosetAction::CosetAction(std::shared_ptr<const GroupTable> table, std::uint32_t h, std::uint32_t nu)
    : table_(std::move(table)), h_(h), nu_(nu) {
    const GroupTable& t = *table_;
    const std::uint32_t one = t.identity();
    const std::uint32_t h2 = t.mul(h, h);
    stabilizer_ = {one, h, h2, nu, t.mul(nu, h), t.mul(nu, h2)};
    std::sort(stabilizer_.begin(), stabilizer_.end());

    constexpr std::uint32_t kUnset = ~std::uint32_t{0};
    vertex_of_.assign(t.size(), kUnset);
    reps_.push_back(stabilizer_.front());
    for (auto s : stabilizer_) vertex_of_[s] = 0;
    for (std::uint32_t x = 0; x < t.size(); ++x) {
        if (vertex_of_[x] != kUnset) continue;
        const auto v = static_cast<std::uint32_t>(reps_.size());
        reps_.push_back(x);
        for (auto s : stabilizer_) vertex_of_[t.mul(x, s)] = v;
    }

    std::vector<bool> reached(reps_.size(), false);
    std::size_t count = 0;
    for (std::uint32_t g = 0; g < t.size(); ++g)
        if (t.in_psl(g) && !reached[vertex_of_[g]]) {
            reached[vertex_of_[g]] = true;
            ++count;
        }
    psl_transitive_ = count == reps_.size();

    const std::uint64_t entries = static_cast<std::uint64_t>(t.size()) * reps_.size();
    if (entries <= kPermTableBudget) {
        perms_.resize(entries);
        for (std::uint32_t g = 0; g < t.size(); ++g)
            for (std::uint32_t v = 0; v < reps_.size(); ++v)
                perms_[static_cast<std::size_t>(g) * reps_.size() + v] =
                    vertex_of_[t.mul(g, reps_[v])];
    }
}

std::vector<std::uint32_t> CosetAction::permutation(std::uint32_t g) const {
    std::vector<std::uint32_t> p(reps_.size());
    for (std::uint32_t v = 0; v < p.size(); ++v) p[v] = image(g, v);
    return p;
}

bool CosetAction::fixes_some_vertex(std::uint32_t g) const {
    for (std::uint32_t v = 0; v < reps_.size(); ++v)
        if (image(g, v) == v) return true;
    return false;
}

CosetAction build_action(std::shared_ptr<const GroupTable> table, std::uint32_t h, std::uint32_t nu) {
    require(table != nullptr && table->which() == Which::PGL, Errc::InvalidArgument,
            "the coset action is built on the PGL table");
    const GroupTable& t = *table;
    require(h < t.size() && nu < t.size(), Errc::InvalidArgument, "element index out of range");
    require(t.order(h) == 3 && t.order(nu) == 2 && t.conj(nu, h) == t.inv(h), Errc::NotS3,
            "<h, nu> is not S3");

    const std::uint32_t h2 = t.mul(h, h);
    const std::array<std::uint32_t, 6> sub = {t.identity(), h, h2, nu, t.mul(nu, h), t.mul(nu, h2)};
    const std::set<std::uint32_t> members(sub.begin(), sub.end());
    require(members.size() == 6, Errc::NotS3, "<h, nu> does not have six elements");
    for (std::size_t i = 1; i < sub.size(); ++i) {
        bool in_core = true;
        for (std::uint32_t g = 0; g < t.size() && in_core; ++g)
            in_core = members.count(t.conj(g, sub[i])) > 0;
        require(!in_core, Errc::NotCoreFree, "<h, nu> contains a normal subgroup");
    }

    CosetAction action(std::move(table), h, nu);
    require(action.psl_transitive(), Errc::InvariantViolation,
            "PSL is not transitive on the cosets of <h, nu>");
    return action;
}

CentralizerReport centralizer_of_h(const GroupTable& table, std::uint32_t h) {
    const auto& f = table.field();
    require(f.p() != 3, Errc::WrongCharacteristic, "centralizer shape needs p != 3");
    CentralizerReport r;
    r.expected_order = table.q() + 1;
    for (std::uint32_t g = 0; g < table.size(); ++g)
        if (table.mul(g, h) == table.mul(h, g)) r.elements.push_back(g);
    for (auto g : r.elements)
        if (table.order(g) == r.elements.size()) {
            r.generator = g;
            break;
        }
    r.cyclic = r.generator.has_value();

    std::set<std::uint32_t> closed;
    const auto& pgl = table.pgl();
    for (gfq::Code a = 0; a < f.q(); ++a) {
        const pgl2::Matrix2 m{1, a, f.neg(a), f.add(1, a)};
        if (pgl.det(m) == 0) continue;
        if (const auto i = table.find(pgl.normalize(m))) closed.insert(*i);
        else closed.insert(~std::uint32_t{0});
    }
    if (const auto i = table.find(pgl.normalize({0, 1, f.neg(1), 1}))) closed.insert(*i);
    r.matches_closed_form = std::set<std::uint32_t>(r.elements.begin(), r.elements.end()) == closed;
    return r;
}

TransversalReport transversal_K(const GroupTable& table, std::span<const std::uint32_t> subgroup) {
    const auto& f = table.field();
    const auto& pgl = table.pgl();
    TransversalReport r;
    for (gfq::Code a = 0; a < f.q(); ++a)
        for (gfq::Code b = 1; b < f.q(); ++b)
            if (const auto i = table.find(pgl.normalize({1, a, 0, b}))) r.elements.push_back(*i);
    std::sort(r.elements.begin(), r.elements.end());

    const std::set<std::uint32_t> s(subgroup.begin(), subgroup.end());
    std::size_t common = 0;
    for (auto k : r.elements) common += s.count(k);
    r.trivial_intersection = common == 1 && s.count(table.identity()) == 1;

    std::vector<std::uint32_t> hits(table.size(), 0);
    for (auto k : r.elements)
        for (auto x : subgroup) ++hits[table.mul(k, x)];
    r.unique_factorization =
        std::all_of(hits.begin(), hits.end(), [](std::uint32_t c) { return c == 1; });
    return r;
}

std::optional<NormalizerPrediction> normalizer_table_entry(std::uint32_t q, std::uint32_t p,
                                                           Which which, std::uint32_t order,
                                                           bool in_psl) {
    const bool one_mod_4 = q % 4 == 1;
    const auto dihedral = [](std::string column, std::uint64_t n) {
        return NormalizerPrediction{std::move(column), n, NormalizerShape::Dihedral};
    };
    if (order <= 1) return std::nullopt;
    if (which == Which::PSL) {
        if (!in_psl) return std::nullopt;
        if (order == 2) return dihedral("o=2", one_mod_4 ? q - 1 : q + 1);
        if (((q - 1) / 2) % order == 0) return dihedral("o|(q-1)/2", q - 1);
        if (((q + 1) / 2) % order == 0) return dihedral("o|(q+1)/2", q + 1);
        if (order == p)
            return NormalizerPrediction{"o|q", std::uint64_t{q} * (p - 1) / 2,
                                        NormalizerShape::AffineType};
        return std::nullopt;
    }
    if (order == 2) {
        if (in_psl) return dihedral("o=2,in-psl", one_mod_4 ? 2 * (q - 1) : 2 * (q + 1));
        return dihedral("o=2,not-psl", one_mod_4 ? 2 * (q + 1) : 2 * (q - 1));
    }
    if ((q - 1) % order == 0) return dihedral("o|q-1", 2 * (q - 1));
    if ((q + 1) % order == 0) return dihedral("o|q+1", 2 * (q + 1));
    if (order == p)
        return NormalizerPrediction{"o=p", std::uint64_t{q} * (p - 1), NormalizerShape::AffineType};
    return std::nullopt;
}

bool NormalizerReport::matches() const {
    if (!predicted || predicted->order != elements.size()) return false;
    if (predicted->shape == NormalizerShape::Dihedral) return dihedral;
    if (predicted->shape == NormalizerShape::AffineType) return normal_sylow_p;
    return false;
}

namespace {

// Dihedral of order 2m: an element r of order m and an involution s outside
// <r> with s r s^{-1} = r^{-1}.
bool is_dihedral(const GroupTable& t, const std::vector<std::uint32_t>& group) {
    if (group.size() < 4 || group.size() % 2 != 0) return false;
    const std::size_t m = group.size() / 2;
    for (auto r : group) {
        if (t.order(r) != m) continue;
        std::set<std::uint32_t> rotations;
        for (std::uint32_t x = t.identity(), i = 0; i < m; ++i, x = t.mul(x, r)) rotations.insert(x);
        for (auto s : group)
            if (t.order(s) == 2 && !rotations.count(s) && t.conj(s, r) == t.inv(r)) return true;
    }
    return false;
}

}  // namespace

NormalizerReport normalizer_of_cyclic(const GroupTable& table, std::uint32_t g) {
    require(g != table.identity(), Errc::InvalidArgument, "normalizer of the trivial subgroup");
    NormalizerReport r;
    r.element = g;
    r.element_order = table.order(g);
    std::set<std::uint32_t> cyclic;
    for (std::uint32_t x = table.identity(), i = 0; i < r.element_order; ++i, x = table.mul(x, g))
        cyclic.insert(x);
    for (std::uint32_t n = 0; n < table.size(); ++n)
        if (cyclic.count(table.conj(n, g))) r.elements.push_back(n);

    const std::uint32_t p = table.field().p();
    std::size_t p_part = 1;
    for (std::size_t n = r.elements.size(); n % p == 0; n /= p) p_part *= p;
    std::size_t p_elements = 0;
    for (auto x : r.elements)
        if (table.order(x) == 1 || table.order(x) == p) ++p_elements;
    r.normal_sylow_p = p_part > 1 && p_elements == p_part;
    r.dihedral = is_dihedral(table, r.elements);
    r.shape = r.dihedral          ? NormalizerShape::Dihedral
              : r.normal_sylow_p ? NormalizerShape::AffineType
                                 : NormalizerShape::Other;
    r.predicted = normalizer_table_entry(table.q(), p, table.which(), r.element_order,
                                         table.in_psl(g));
    return r;
}

S3ClassReport s3_class_count(const GroupTable& table) {
    using Key = std::array<std::uint32_t, 6>;
    std::vector<std::uint32_t> threes, twos;
    for (std::uint32_t g = 0; g < table.size(); ++g) {
        if (table.order(g) == 3) threes.push_back(g);
        if (table.order(g) == 2) twos.push_back(g);
    }
    auto make_key = [&](std::uint32_t x, std::uint32_t y) {
        const std::uint32_t x2 = table.mul(x, x);
        Key k = {table.identity(), x, x2, y, table.mul(y, x), table.mul(y, x2)};
        std::sort(k.begin(), k.end());
        return k;
    };
    std::set<Key> subgroups;
    for (auto x : threes) {
        const std::uint32_t x_inv = table.inv(x);
        for (auto y : twos)
            if (table.conj(y, x) == x_inv) subgroups.insert(make_key(x, y));
    }

    S3ClassReport r;
    r.subgroup_count = subgroups.size();
    std::set<Key> assigned;
    for (const Key& k : subgroups) {
        if (assigned.count(k)) continue;
        std::set<Key> cls;
        for (std::uint32_t g = 0; g < table.size(); ++g) {
            Key c;
            for (std::size_t i = 0; i < 6; ++i) c[i] = table.conj(g, k[i]);
            std::sort(c.begin(), c.end());
            cls.insert(c);
        }
        assigned.insert(cls.begin(), cls.end());
        r.class_sizes.push_back(cls.size());
        if (std::all_of(k.begin(), k.end(), [&](std::uint32_t x) { return table.in_psl(x); }))
            ++r.classes_inside_psl;
    }
    return r;
}

std::vector<Suborbit> suborbits(const CosetAction& action, std::uint32_t v, Which which) {
    const GroupTable& t = action.group();
    const std::uint32_t n = action.degree();
    auto in_group = [&](std::uint32_t g) { return which == Which::PGL || t.in_psl(g); };

    std::vector<std::uint32_t> stab;
    for (std::uint32_t g = 0; g < t.size(); ++g)
        if (in_group(g) && action.image(g, v) == v) stab.push_back(g);

    constexpr std::uint32_t kNone = ~std::uint32_t{0};
    std::vector<std::uint32_t> orbit_of(n, kNone);
    std::vector<Suborbit> out;
    for (std::uint32_t w = 0; w < n; ++w) {
        if (orbit_of[w] != kNone) continue;
        const auto id = static_cast<std::uint32_t>(out.size());
        Suborbit s;
        for (auto g : stab) {
            const std::uint32_t x = action.image(g, w);
            if (orbit_of[x] == kNone) {
                orbit_of[x] = id;
                s.vertices.push_back(x);
            }
        }
        std::sort(s.vertices.begin(), s.vertices.end());
        out.push_back(std::move(s));
    }
    // The orbital through (v, w) is symmetric iff g^{-1}(v) lies in the same
    // suborbit as w, for any g in the group with g(v) = w.
    for (std::uint32_t id = 0; id < out.size(); ++id) {
        const std::uint32_t w = out[id].vertices.front();
        for (std::uint32_t g = 0; g < t.size(); ++g)
            if (in_group(g) && action.image(g, v) == w) {
                out[id].symmetric = orbit_of[action.image(t.inv(g), v)] == id;
                break;
            }
    }
    return out;
}

std::optional<CubicGraph> build_cubic_graph(const CosetAction& action) {
    const auto subs = suborbits(action, 0, Which::PGL);
    const auto it = std::find_if(subs.begin(), subs.end(), [](const Suborbit& s) {
        return s.symmetric && s.vertices.size() == 3;
    });
    if (it == subs.end()) return std::nullopt;

    const GroupTable& t = action.group();
    const std::uint32_t n = action.degree();
    CubicGraph x{BitGraph(n), *it, false, false};
    for (std::uint32_t u = 0; u < n; ++u)
        for (auto w : it->vertices) x.graph.set_arc(u, action.image(action.representative(u), w));
    require(x.graph.is_symmetric() && x.graph.is_loop_free(), Errc::InvariantViolation,
            "orbital graph of a symmetric suborbit is not undirected");
    for (std::uint32_t u = 0; u < n; ++u)
        require(x.graph.degree(u) == 3, Errc::InvariantViolation, "orbital graph is not cubic");

    const std::uint32_t w0 = it->vertices.front();
    std::set<std::pair<std::uint32_t, std::uint32_t>> arcs, psl_arcs;
    std::size_t psl_order = 0;
    for (std::uint32_t g = 0; g < t.size(); ++g) {
        const auto arc = std::make_pair(action.image(g, 0), action.image(g, w0));
        arcs.insert(arc);
        if (t.in_psl(g)) {
            psl_arcs.insert(arc);
            ++psl_order;
        }
    }
    x.arc_transitive = arcs.size() == 3 * std::size_t{n};
    x.psl_arc_regular = psl_arcs.size() == 3 * std::size_t{n} && psl_order == psl_arcs.size();
    return x;
}

}  // namespace idens::atlas
