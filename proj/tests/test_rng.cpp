#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "etop/rng.hpp"

using etop::Rng;
using etop::derive_seed;

TEST_CASE("same seed reproduces the stream, different seeds diverge") {
    Rng a(42), b(42), c(43);
    bool diverged = false;
    for (int i = 0; i < 1000; ++i) {
        const std::uint64_t va = a.next();
        CHECK(va == b.next());
        if (va != c.next()) diverged = true;
    }
    CHECK(diverged);
}

TEST_CASE("golden stream values pin the generator across platforms") {
    // Frozen outputs; a change here breaks every stored seed in the wild.
    Rng r(42);
    CHECK(r.next() == 1546998764402558742ULL);
    CHECK(r.next() == 6990951692964543102ULL);
    CHECK(r.next() == 12544586762248559009ULL);
    CHECK(r.next_double() == 0.92469294532538759);
    CHECK(derive_seed(7, {}) == 7191089600892374487ULL);
    CHECK(derive_seed(7, {1}) == 1458116250425824002ULL);
    CHECK(derive_seed(7, {1, 2}) == 14004316474361532379ULL);
}

TEST_CASE("next_double stays in [0, 1) and fills the range") {
    Rng rng(7);
    int buckets[16] = {};
    for (int i = 0; i < 16000; ++i) {
        const double u = rng.next_double();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        ++buckets[static_cast<int>(u * 16.0)];
    }
    for (int b : buckets) CHECK(b > 500);  // ~1000 expected per bucket
}

TEST_CASE("below respects the bound and hits every value") {
    Rng rng(1);
    std::set<std::uint64_t> seen;
    for (int i = 0; i < 2000; ++i) {
        const std::uint64_t v = rng.below(7);
        CHECK(v < 7);
        seen.insert(v);
    }
    CHECK(seen.size() == 7);
}

TEST_CASE("uniform_int is inclusive on both ends") {
    Rng rng(2);
    bool hit_lo = false, hit_hi = false;
    for (int i = 0; i < 2000; ++i) {
        const int v = rng.uniform_int(-3, 3);
        CHECK(v >= -3);
        CHECK(v <= 3);
        hit_lo = hit_lo || v == -3;
        hit_hi = hit_hi || v == 3;
    }
    CHECK(hit_lo);
    CHECK(hit_hi);
}

TEST_CASE("shuffle permutes without losing elements") {
    Rng rng(3);
    std::vector<int> v{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    const std::vector<int> original = v;
    rng.shuffle(v);
    CHECK(v != original);  // 1/10! odds of a false alarm, fixed seed
    std::vector<int> sorted = v;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == original);
}

TEST_CASE("derived seeds depend on path content, order, and length") {
    const std::uint64_t master = 99;
    const std::uint64_t ab = derive_seed(master, {1, 2});
    CHECK(ab == derive_seed(master, {1, 2}));
    CHECK(ab != derive_seed(master, {2, 1}));
    CHECK(ab != derive_seed(master, {1}));
    CHECK(ab != derive_seed(master, {1, 2, 0}));
    CHECK(ab != derive_seed(master + 1, {1, 2}));
}

TEST_CASE("derived streams do not collide over a realistic grid") {
    std::set<std::uint64_t> seeds;
    int count = 0;
    for (std::uint64_t s = 0; s < 3; ++s)
        for (std::uint64_t i = 0; i < 10; ++i)
            for (std::uint64_t a = 1; a <= 4; ++a)
                for (std::uint64_t r = 0; r < 10; ++r) {
                    seeds.insert(derive_seed(5, {s, i, a, r}));
                    ++count;
                }
    CHECK(static_cast<int>(seeds.size()) == count);
}
