#include <doctest.h>

#include "dm/setsys.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace dm;

TEST_CASE("construction dedupes and orders the family") {
  GroundSet g = GroundSet::numbered(3);
  SetSystem M(g, {0b110, 0b001, 0b110, 0b011});
  CHECK(M.size() == 3);
  CHECK(M.family() == std::vector<Mask>{0b001, 0b011, 0b110});
  CHECK(M.is_member(0b110));
  CHECK_FALSE(M.is_member(0b100));
  CHECK_THROWS_AS(SetSystem(g, {0b1000}), ValidationError);
  SetSystem improper(g, {});
  CHECK_FALSE(improper.proper());
  CHECK_THROWS_AS(improper.d(), ValidationError);
}

TEST_CASE("twist, loop complementation and dual pivot match their references") {
  fx::Rng rng(21);
  for (int rep = 0; rep < 60; ++rep) {
    int n = 1 + static_cast<int>(rng() % 5);
    SetSystem M = fx::rand_set_system(n, rng);
    Mask X = fx::rand_mask(n, rng);
    CHECK(M.twist(X) == oracle::twist_literal(M, X));
    CHECK(M.loop_complement(X) == oracle::loopc_counting(M, X));
    CHECK(M.dual_pivot(X) == oracle::dual_pivot_word(M, X));
    CHECK(M.twist(X).twist(X) == M);
    CHECK(M.loop_complement(X).loop_complement(X) == M);
    CHECK(M.dual_pivot(X).dual_pivot(X) == M);
  }
}

TEST_CASE("one-element words satisfy the S3 relations") {
  fx::Rng rng(22);
  for (int rep = 0; rep < 20; ++rep) {
    int n = 2 + static_cast<int>(rng() % 3);
    SetSystem M = fx::rand_set_system(n, rng);
    size_t u = rng() % n;
    Mask ub = Mask{1} << u;
    CHECK(M.twist(ub).loop_complement(ub).twist(ub) ==
          M.loop_complement(ub).twist(ub).loop_complement(ub));
    CHECK(M.twist(ub).loop_complement(ub).twist(ub) == M.dual_pivot(ub));
    // ops on distinct elements commute
    size_t v = (u + 1) % n;
    Mask vb = Mask{1} << v;
    CHECK(M.twist(ub).loop_complement(vb) == M.loop_complement(vb).twist(ub));
    CHECK(M.dual_pivot(ub).twist(vb) == M.twist(vb).dual_pivot(ub));
    // the composition table agrees with literal application
    for (int g = 0; g < 6; ++g)
      for (int h = 0; h < 6; ++h) {
        SetSystem lhs = oracle::apply_s3_word(oracle::apply_s3_word(M, u, g), u, h);
        SetSystem rhs = oracle::apply_s3_word(
            M, u, s3::compose(static_cast<uint8_t>(g), static_cast<uint8_t>(h)));
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("normal form of twist and loop complementation words") {
  fx::Rng rng(23);
  for (int rep = 0; rep < 30; ++rep) {
    int n = 2 + static_cast<int>(rng() % 3);
    GroundSet g = GroundSet::numbered(n);
    SetSystem M = fx::rand_set_system(n, rng);
    std::vector<Op> word;
    int len = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < len; ++i) {
      OpKind k = static_cast<int>(rng() % 3) == 0   ? OpKind::Twist
                 : static_cast<int>(rng() % 2) == 0 ? OpKind::LoopC
                                                    : OpKind::DualPivot;
      word.push_back(Op{k, g.labels_of(fx::rand_mask(n, rng))});
    }
    NormalForm nf = normal_form(g, word);
    CHECK((nf.z1 & ~nf.z2) == 0);
    CHECK(apply_sequence(M, word) == apply_normal_form(M, nf));
  }
  GroundSet g = GroundSet::numbered(2);
  CHECK_THROWS_AS(normal_form(g, {Op{OpKind::Delete, {"1"}}}), ValidationError);
}

TEST_CASE("deletion and restriction shrink the ground set") {
  GroundSet g({"a", "b", "c"});
  SetSystem M(g, {0b000, 0b011, 0b101});
  SetSystem R = M.restrict(0b011);
  CHECK(R.ground().labels() == std::vector<std::string>{"a", "b"});
  CHECK(R.family() == std::vector<Mask>{0b00, 0b11});
  SetSystem D = M.del(0b100);
  CHECK(D.ground().labels() == std::vector<std::string>{"a", "b"});
  CHECK(D.family() == std::vector<Mask>{0b00, 0b11});
  std::vector<Op> word{Op{OpKind::Twist, {"a"}}, Op{OpKind::Delete, {"c"}}};
  SetSystem A = apply_sequence(M, word);
  CHECK(A.ground().size() == 2);
  CHECK(A == M.twist(0b001).del(0b100));
}

TEST_CASE("d is stable under loop complementation and shifts under twist") {
  fx::Rng rng(24);
  for (int rep = 0; rep < 40; ++rep) {
    int n = 1 + static_cast<int>(rng() % 5);
    SetSystem M = fx::rand_set_system(n, rng);
    Mask X = fx::rand_mask(n, rng);
    CHECK(M.loop_complement(X).d() == M.d());
    int want = 64;
    for (Mask Z : M.family()) want = std::min(want, popcount(Z ^ X));
    CHECK(M.twist(X).d() == want);
  }
}

TEST_CASE("extremal systems") {
  GroundSet g = GroundSet::numbered(3);
  SetSystem M(g, {0b001, 0b011, 0b100, 0b111});
  CHECK(M.min_system().family() == std::vector<Mask>{0b001, 0b100});
  CHECK(M.max_system().family() == std::vector<Mask>{0b111});
  SetSystem N(g, {0b001, 0b010, 0b110});
  CHECK(N.max_system().family() == std::vector<Mask>{0b001, 0b110});
  CHECK(M.min_system().ground() == g);
}

TEST_CASE("loops, coloops, parity") {
  GroundSet g = GroundSet::numbered(3);
  SetSystem M(g, {0b001, 0b011});
  CHECK(M.is_coloop(0));
  CHECK(M.is_loop(2));
  CHECK_FALSE(M.is_singular(1));
  CHECK_FALSE(M.is_even());
  CHECK_FALSE(M.is_equicardinal());
  SetSystem E(g, {0b000, 0b011});
  CHECK(E.is_even());
  SetSystem Q(g, {0b001, 0b100});
  CHECK(Q.is_equicardinal());
}

TEST_CASE("delta-matroid recognition") {
  GroundSet g = GroundSet::numbered(4);
  SetSystem sum(g, {0b0000, 0b0011, 0b1100, 0b1111});
  CHECK(sum.is_delta_matroid());  // direct sum of two pair systems
  SetSystem bad(g, {0b0000, 0b1111});  // no exchange lands on a 2-set
  CHECK_FALSE(bad.is_delta_matroid());
  SetSystem::ExchangeViolation v{};
  CHECK(bad.find_exchange_violation(&v));
  CHECK(bad.is_member(v.X));
  CHECK(bad.is_member(v.Y));
  CHECK(((v.X ^ v.Y) >> v.x & 1) == 1);

  fx::Rng rng(25);
  for (int rep = 0; rep < 25; ++rep) {
    int n = 1 + static_cast<int>(rng() % 4);
    SetSystem M = fx::rand_delta_matroid(n, rng);
    CHECK(M.is_delta_matroid());
  }
  CHECK_FALSE(SetSystem(g, {}).is_delta_matroid());
}

TEST_CASE("vf-safety agrees with the full orbit scan") {
  fx::Rng rng(26);
  int safe_seen = 0, unsafe_seen = 0;
  for (int rep = 0; rep < 40; ++rep) {
    int n = 1 + static_cast<int>(rng() % 4);
    SetSystem M = rep % 2 ? fx::rand_delta_matroid(n, rng)
                          : fx::rand_set_system(n, rng);
    bool safe = M.is_vf_safe();
    CHECK(safe == oracle::vf_safe_full_orbit(M));
    (safe ? safe_seen : unsafe_seen)++;
  }
  CHECK(safe_seen > 0);
  CHECK(unsafe_seen > 0);
  SetSystem big(GroundSet::numbered(13), {0});
  CHECK_THROWS_AS(big.is_vf_safe(), CapacityError);
}

TEST_CASE("family string") {
  GroundSet g = GroundSet::numbered(3);
  SetSystem M(g, {0b000, 0b101});
  CHECK(M.family_string() == "{}, {1 3}");
  CHECK(g.subset_string(0b110) == "{2 3}");
}
