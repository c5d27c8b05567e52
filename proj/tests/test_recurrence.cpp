#include <doctest.h>

#include "gridmagic/common.hpp"
#include "gridmagic/config.hpp"
#include "gridmagic/counting.hpp"
#include "gridmagic/recurrence.hpp"

using namespace gridmagic;

namespace {

std::vector<Rat> rats(std::initializer_list<long> xs) {
    std::vector<Rat> v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

}  // namespace

TEST_CASE("transfer matrix for single-row boards") {
    TransferMatrix a = transfer_matrix(1, 1);
    REQUIRE(a.dim == 2);
    CHECK(a.successors[0] == std::vector<int>{1});
    CHECK(a.successors[1] == std::vector<int>{0});
    for (long long n = 0; n <= 8; ++n)
        CHECK(transfer_power_entry00(a, n) == (n % 2 == 0 ? 1 : 0));
}

TEST_CASE("transfer matrix powers match the DP") {
    TransferMatrix a21 = transfer_matrix(2, 1);
    REQUIRE(a21.dim == 4);
    CHECK(transfer_power_entry00(a21, 2) == 2);
    for (long long n = 1; n <= 6; ++n)
        CHECK(transfer_power_entry00(a21, n) ==
              count_grid(2, static_cast<int>(n), 1, CountMode::all).value);

    TransferMatrix a22 = transfer_matrix(2, 2);
    REQUIRE(a22.dim == 9);
    CHECK(transfer_power_entry00(a22, 3) == count_grid(2, 3, 2, CountMode::all).value);
}

TEST_CASE("state cap") {
    auto saved = config().state_cap;
    config().state_cap = 10;
    CHECK_THROWS_AS(transfer_matrix(2, 3), cap_exceeded);  // 16 states
    CHECK_NOTHROW(transfer_matrix(2, 2));                  // 9 states
    config().state_cap = saved;
}

TEST_CASE("characteristic polynomial") {
    TransferMatrix a = transfer_matrix(1, 1);
    CHECK(characteristic_polynomial(a) == std::vector<Int>{-1, 0, 1});  // x^2 - 1
    Recurrence rec = char_poly_recurrence(a);
    CHECK(rec.order == 2);
    CHECK(rec.coeffs == rats({0, 1}));  // a_n = a_{n-2}
}

TEST_CASE("char-poly recurrence is full order, minimal one shorter") {
    Recurrence full = char_poly_recurrence(transfer_matrix(2, 1));
    CHECK(full.order == 4);  // (t+1)^m

    std::vector<Rat> seq;
    for (const Int& v : tiling_sequence(2, 1, 20)) seq.emplace_back(v);
    Recurrence minimal = berlekamp_massey(seq);
    CHECK(minimal.order == 2);
    CHECK(minimal.coeffs == rats({1, 1}));  // Fibonacci shift
}

TEST_CASE("berlekamp-massey on classic sequences") {
    Recurrence fib = berlekamp_massey(rats({1, 1, 2, 3, 5, 8, 13, 21}));
    CHECK(fib.order == 2);
    CHECK(fib.coeffs == rats({1, 1}));

    Recurrence ones = berlekamp_massey(rats({1, 1, 1, 1}));
    CHECK(ones.order == 1);
    CHECK(ones.coeffs == rats({1}));

    // three-row tiling counts: a_n = 4 a_{n-2} - a_{n-4}
    std::vector<Rat> t3;
    for (const Int& v : tiling_sequence(3, 1, 12)) t3.emplace_back(v);
    Recurrence rec3 = berlekamp_massey(t3);
    CHECK(rec3.order == 4);
    CHECK(rec3.coeffs == rats({0, 4, 0, -1}));
    std::vector<Rat> pred = extend(rec3, Direction::forward, 13);  // a_4 .. a_16
    std::vector<Int> truth = tiling_sequence(3, 1, 17);
    for (int k = 0; k < 5; ++k) CHECK(pred[12 + k - rec3.order] == Rat(truth[12 + k]));
}

TEST_CASE("berlekamp-massey rejects sequences without a short recurrence") {
    CHECK_THROWS_AS(berlekamp_massey(rats({1, 2, 4, 8, 16, 31})), domain_error);
    CHECK_THROWS_AS(berlekamp_massey(rats({1})), std::invalid_argument);
}

TEST_CASE("backward extension") {
    Recurrence fib = berlekamp_massey(rats({1, 1, 2, 3, 5, 8, 13, 21}));
    std::vector<Rat> back = extend(fib, Direction::backward, 3);
    CHECK(back == rats({0, 1, -1}));  // indices -1, -2, -3

    Recurrence ones = berlekamp_massey(rats({1, 1, 1, 1}));
    std::vector<Rat> cback = extend(ones, Direction::backward, 4);
    CHECK(cback == rats({1, 1, 1, 1}));

    std::vector<Rat> t3;
    for (const Int& v : tiling_sequence(3, 1, 12)) t3.emplace_back(v);
    std::vector<Rat> b3 = extend(berlekamp_massey(t3), Direction::backward, 4);
    CHECK(b3[3] == 3);  // T(3, -4, 1) = T(3, 2, 1)

    Recurrence no_back;
    no_back.order = 2;
    no_back.coeffs = rats({1, 0});
    no_back.seed_index = 0;
    no_back.seed = rats({1, 1});
    CHECK_THROWS_AS(extend(no_back, Direction::backward, 1), domain_error);
}

TEST_CASE("backward values do not depend on the certified recurrence used") {
    // full-order characteristic recurrence vs the minimal one
    Recurrence full = char_poly_recurrence(transfer_matrix(2, 1));
    std::vector<Rat> seq;
    for (const Int& v : tiling_sequence(2, 1, 20)) seq.emplace_back(v);
    Recurrence minimal = berlekamp_massey(seq);
    std::vector<Rat> b1 = extend(full, Direction::backward, 8);
    std::vector<Rat> b2 = extend(minimal, Direction::backward, 8);
    CHECK(b1 == b2);
}

TEST_CASE("reciprocity reports") {
    ReciprocityReport m2 = verify_reciprocity(2, 5);
    CHECK(m2.all_pass);
    CHECK(m2.ell == 1);
    CHECK(m2.rows[1].forward == 1);
    CHECK(m2.rows[1].backward == -1);
    CHECK(m2.rows[1].sign == -1);

    ReciprocityReport m3 = verify_reciprocity(3, 4);
    CHECK(m3.all_pass);
    CHECK(m3.ell == 2);
    CHECK(m3.rows[2].forward == 3);   // T(3, 2, 1)
    CHECK(m3.rows[2].backward == 3);  // T(3, -4, 1), no sign for even ell

    CHECK(verify_reciprocity(4, 8).all_pass);
    ReciprocityReport m5 = verify_reciprocity(5, 6);
    CHECK(m5.all_pass);
    CHECK(m5.odd_zero_check);
}

TEST_CASE("power recurrences") {
    PowerReport sq = power_recurrence(2, 2, 6);
    CHECK(sq.rec.order == 3);
    CHECK(sq.rec.coeffs == rats({2, 2, -1}));
    CHECK(sq.all_pass);

    PowerReport base = power_recurrence(2, 1, 6);
    CHECK(base.rec.order == 2);  // degenerates to the plain sequence

    CHECK(power_recurrence(3, 2, 5).all_pass);
}

TEST_CASE("power reciprocity is the t-th power of base reciprocity") {
    for (int m : {2, 3}) {
        ReciprocityReport base = verify_reciprocity(m, 6);
        for (long long t : {2, 3}) {
            PowerReport pow = power_recurrence(m, t, 6);
            for (std::size_t i = 0; i < pow.rows.size(); ++i) {
                Rat b = base.rows[i].backward;
                Rat expect = b;
                for (long long k = 1; k < t; ++k) expect *= b;
                CHECK(pow.rows[i].backward == expect);
            }
        }
    }
}

TEST_CASE("kasteleyn closed form") {
    CHECK(kasteleyn(2, 2) == 2);
    CHECK(kasteleyn(3, 4) == 11);
    CHECK(kasteleyn(1, 1) == 0);
    CHECK(kasteleyn(1, 2) == 1);
    CHECK(kasteleyn(3, 3) == 0);
    CHECK(kasteleyn(5, 5) == 0);
    CHECK(kasteleyn(8, 8) == 12988816);
    for (int m = 1; m <= 6; ++m)
        for (int n = 1; n <= 6; ++n)
            CHECK(kasteleyn(m, n) == count_grid(m, n, 1, CountMode::all).value);

    auto saved = config().precision_ceiling_bits;
    config().precision_ceiling_bits = 64;
    CHECK_THROWS_AS(kasteleyn(4, 4), cap_exceeded);
    config().precision_ceiling_bits = saved;
}

TEST_CASE("recurrence formatting") {
    Recurrence fib = berlekamp_massey(rats({1, 1, 2, 3, 5, 8, 13, 21}));
    CHECK(format_recurrence(fib) == "a(n) = 1*a(n-1) + 1*a(n-2)");
}
