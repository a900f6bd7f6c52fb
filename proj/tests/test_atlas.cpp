#include "oracles.hpp"

#include "idens/atlas.hpp"
#include "idens/error.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

using namespace idens;
using atlas::Which;

namespace {

struct Setup {
    std::shared_ptr<const atlas::GroupTable> table;
    std::uint32_t h = 0, nu = 0;
    std::optional<atlas::CosetAction> action;
};

Setup setup(std::uint32_t q) {
    const auto pk = gfq::prime_power(q);
    Setup s;
    s.table = atlas::enumerate_group(gfq::Field::create(pk->first, pk->second), Which::PGL);
    s.h = atlas::canonical_h(*s.table);
    s.nu = atlas::find_inverting_involution(*s.table, s.h);
    s.action = atlas::build_action(s.table, s.h, s.nu);
    return s;
}

// S3 subgroups of PGL(2,p) as sorted element sets, straight from the oracle.
std::set<std::vector<oracle::Mat>> oracle_s3_subgroups(std::int64_t p) {
    const auto elems = oracle::pgl_elements(p);
    std::set<std::vector<oracle::Mat>> out;
    for (const auto& x : elems) {
        if (oracle::order(x, p) != 3) continue;
        const auto x2 = oracle::mul(x, x, p);
        for (const auto& y : elems) {
            if (oracle::order(y, p) != 2) continue;
            if (!(oracle::mul(oracle::mul(y, x, p), y, p) == x2)) continue;
            std::vector<oracle::Mat> sub{oracle::normalize({1, 0, 0, 1}, p), x, x2, y,
                                         oracle::mul(y, x, p), oracle::mul(y, x2, p)};
            std::sort(sub.begin(), sub.end());
            out.insert(sub);
        }
    }
    return out;
}

std::size_t oracle_class_count(std::int64_t p, const std::set<std::vector<oracle::Mat>>& subgroups) {
    const auto elems = oracle::pgl_elements(p);
    std::set<std::vector<oracle::Mat>> seen;
    std::size_t classes = 0;
    for (const auto& s : subgroups) {
        if (seen.count(s)) continue;
        ++classes;
        for (const auto& g : elems) {
            std::vector<oracle::Mat> c;
            for (const auto& x : s) c.push_back(oracle::mul(oracle::mul(g, x, p), oracle::inv(g, p), p));
            std::sort(c.begin(), c.end());
            seen.insert(c);
        }
    }
    return classes;
}

}  // namespace

TEST_CASE("group orders") {
    for (std::uint32_t q : {3U, 5U, 7U, 9U, 11U, 25U, 27U}) {
        const auto pk = gfq::prime_power(q);
        const auto f = gfq::Field::create(pk->first, pk->second);
        const std::uint64_t pgl = std::uint64_t{q} * (q - 1) * (q + 1);
        const auto g = atlas::enumerate_group(f, Which::PGL);
        const auto s = atlas::enumerate_group(f, Which::PSL);
        CHECK(g->size() == pgl);
        CHECK(s->size() == pgl / 2);
        CHECK(g->element(g->identity()) == g->pgl().identity());
        for (std::uint32_t i = 1; i < g->size(); ++i)
            CHECK(g->pgl().encode(g->element(i - 1)) < g->pgl().encode(g->element(i)));
    }
    CHECK(atlas::enumerate_group(gfq::Field::create(3, 3), Which::PGL)->size() == 19656);
    try {
        atlas::enumerate_group(gfq::Field::create(7, 1), Which::PGL, 100);
        FAIL("expected TooLarge");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::TooLarge);
    }
}

TEST_CASE("table arithmetic agrees with the projective group") {
    const auto s = setup(7);
    const auto& t = *s.table;
    for (std::uint32_t x = 0; x < t.size(); x += 7)
        for (std::uint32_t y = 0; y < t.size(); y += 5) {
            CHECK(t.element(t.mul(x, y)) == t.pgl().mul(t.element(x), t.element(y)));
            CHECK(t.mul(x, t.inv(x)) == t.identity());
        }
    for (std::uint32_t x = 0; x < t.size(); ++x) CHECK(t.order(x) == t.pgl().order(t.element(x)));
    CHECK_THROWS_AS(atlas::enumerate_group(t.pgl().field_ptr(), Which::PSL)->index_of(t.element(s.nu)), Error);
}

TEST_CASE("canonical h and the inverting involution") {
    const auto s = setup(5);
    const auto& t = *s.table;
    CHECK(t.element(s.h).matrix() == pgl2::Matrix2{0, 1, 4, 1});
    CHECK(t.order(s.h) == 3);
    CHECK(t.order(s.nu) == 2);
    CHECK_FALSE(t.in_psl(s.nu));
    CHECK(t.conj(s.nu, s.h) == t.inv(s.h));
    for (std::uint32_t i = 0; i < s.nu; ++i)
        CHECK_FALSE((t.order(i) == 2 && !t.in_psl(i) && t.conj(i, s.h) == t.inv(s.h)));

    const auto t9 = atlas::enumerate_group(gfq::Field::create(3, 2), Which::PGL);
    try {
        atlas::find_inverting_involution(*t9, atlas::canonical_h(*t9));
        FAIL("expected NoSuchInvolution");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NoSuchInvolution);
    }
}

TEST_CASE("coset action") {
    for (std::uint32_t q : {3U, 5U, 7U, 11U, 13U}) {
        const auto s = setup(q);
        const auto& a = *s.action;
        const auto& t = *s.table;
        CHECK(a.degree() == t.size() / 6);
        CHECK(a.psl_transitive());
        CHECK(a.vertex_of(s.h) == 0);
        CHECK(a.vertex_of(s.nu) == 0);
        CHECK(a.representative(0) == a.stabilizer().front());
        std::size_t fixing_zero = 0;
        for (std::uint32_t g = 0; g < t.size(); ++g) fixing_zero += a.image(g, 0) == 0;
        CHECK(fixing_zero == 6);
        // Action property on a sample.
        for (std::uint32_t g = 0; g < t.size(); g += 11)
            for (std::uint32_t k = 0; k < t.size(); k += 13)
                for (std::uint32_t v = 0; v < a.degree(); v += 3)
                    CHECK(a.image(t.mul(g, k), v) == a.image(g, a.image(k, v)));
        for (std::uint32_t v = 1; v < a.degree(); ++v) CHECK((v == 1 || a.representative(v - 1) < a.representative(v)));
    }
}

TEST_CASE("build_action rejects bad generators") {
    const auto s = setup(5);
    const auto& t = *s.table;
    CHECK_THROWS_AS(atlas::build_action(s.table, s.h, s.h), Error);
    try {
        atlas::build_action(s.table, t.identity(), s.nu);
        FAIL("expected NotS3");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotS3);
    }
}

TEST_CASE("conjugacy class of h") {
    const auto s = setup(5);
    const auto& t = *s.table;
    const std::uint32_t hs[] = {s.h};
    const auto mask = atlas::conjugacy_closure(t, hs, Which::PGL);
    CHECK(std::count(mask.begin(), mask.end(), true) == 20);
    CHECK(t.class_of_h().size() == 20);
    for (auto x : t.class_of_h()) CHECK(t.order(x) == 3);
}

TEST_CASE("centralizer of h") {
    for (std::uint32_t q : {5U, 11U, 17U, 23U, 29U}) {
        const auto s = setup(q);
        const auto c = atlas::centralizer_of_h(*s.table, s.h);
        CHECK(c.ok());
        CHECK(c.elements.size() == q + 1);
    }
    // For q = 1 mod 3, h sits in a split torus and its centralizer has order q - 1.
    for (std::uint32_t q : {7U, 13U}) {
        const auto s = setup(q);
        const auto c = atlas::centralizer_of_h(*s.table, s.h);
        CHECK(c.cyclic);
        CHECK(c.elements.size() == q - 1);
        CHECK_FALSE(c.ok());
    }
    const auto s = setup(3);
    try {
        atlas::centralizer_of_h(*s.table, s.h);
        FAIL("expected WrongCharacteristic");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::WrongCharacteristic);
    }
}

TEST_CASE("K is a transversal of the centralizer for q = 2 mod 3") {
    for (std::uint32_t q : {5U, 11U}) {
        const auto s = setup(q);
        const auto c = atlas::centralizer_of_h(*s.table, s.h);
        const auto k = atlas::transversal_K(*s.table, c.elements);
        CHECK(k.elements.size() == std::size_t{q} * (q - 1));
        CHECK(k.ok());
    }
}

TEST_CASE("S3 subgroups agree with the oracle") {
    for (std::uint32_t p : {5U, 7U}) {
        const auto expected = oracle_s3_subgroups(p);
        const auto pk = gfq::prime_power(p);
        const auto t = atlas::enumerate_group(gfq::Field::create(pk->first, pk->second), Which::PGL);
        const auto r = atlas::s3_class_count(*t);
        CHECK(r.subgroup_count == expected.size());
        CHECK(std::accumulate(r.class_sizes.begin(), r.class_sizes.end(), std::size_t{0}) == expected.size());
        CHECK(r.class_count() == oracle_class_count(p, expected));
    }
}

TEST_CASE("normalizer table entries") {
    const auto t5 = setup(5);
    const auto e = atlas::normalizer_table_entry(5, 5, Which::PGL, 3, true);
    REQUIRE(e.has_value());
    CHECK(e->order == 12);
    CHECK(e->shape == atlas::NormalizerShape::Dihedral);
    const auto r = atlas::normalizer_of_cyclic(*t5.table, t5.h);
    CHECK(r.elements.size() == 12);
    CHECK(r.dihedral);
    CHECK(r.matches());
    CHECK_THROWS_AS(atlas::normalizer_of_cyclic(*t5.table, t5.table->identity()), Error);
}

TEST_CASE("brute-force normalizers match the tables at prime q") {
    for (std::uint32_t q : {5U, 7U, 11U, 13U}) {
        const auto s = setup(q);
        const auto& t = *s.table;
        std::set<std::pair<std::uint32_t, bool>> seen;
        for (std::uint32_t g = 0; g < t.size(); ++g) {
            if (g == t.identity() || !seen.insert({t.order(g), t.in_psl(g)}).second) continue;
            const auto r = atlas::normalizer_of_cyclic(t, g);
            if (r.predicted) CHECK_MESSAGE(r.matches(), "q=" << q << " order=" << t.order(g));
        }
    }
}

TEST_CASE("suborbits partition the vertices") {
    for (std::uint32_t q : {5U, 7U, 11U}) {
        const auto s = setup(q);
        for (auto which : {Which::PGL, Which::PSL}) {
            const auto orbits = atlas::suborbits(*s.action, 0, which);
            std::size_t total = 0;
            for (const auto& o : orbits) total += o.vertices.size();
            CHECK(total == s.action->degree());
            REQUIRE_FALSE(orbits.empty());
            CHECK(orbits.front().vertices == std::vector<std::uint32_t>{0});
            for (const auto& o : orbits) CHECK(o.vertices.size() <= 6);
        }
    }
}

TEST_CASE("cubic graph") {
    for (std::uint32_t q : {5U, 7U, 11U, 13U}) {
        const auto s = setup(q);
        const auto c = atlas::build_cubic_graph(*s.action);
        REQUIRE(c.has_value());
        const auto n = s.action->degree();
        CHECK(c->graph.size() == n);
        CHECK(c->graph.is_symmetric());
        CHECK(c->graph.is_loop_free());
        for (std::uint32_t v = 0; v < n; ++v) CHECK(c->graph.degree(v) == 3);
        CHECK(c->graph.edge_count() == 3 * std::size_t{n} / 2);
        CHECK(c->arc_transitive);
        CHECK(c->psl_arc_regular);
        CHECK(c->neighbourhood.symmetric);
    }
}
