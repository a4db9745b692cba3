#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "soclelab/lr.hpp"
#include "soclelab/partition.hpp"

using namespace soclelab;

namespace {
Partition P(const char* s) { return Partition::parse(s); }
}

TEST_CASE("partition basics") {
  CHECK(P("-").empty());
  CHECK(P("3,2,1").size() == 6);
  CHECK(P("3,2,1").length() == 3);
  CHECK(P("3,0,0") == P("3"));
  CHECK(P("3,2,1").str() == "3,2,1");
  CHECK(P("-").str() == "-");
  CHECK_THROWS(P("1,2"));
  CHECK_THROWS(P("2,x"));
  CHECK_THROWS(P("2,,1"));
  CHECK(P("4,2,1").contains(P("2,2")));
  CHECK_FALSE(P("4,2,1").contains(P("3,3")));
  CHECK_FALSE(P("2").contains(P("1,1")));
}

TEST_CASE("conjugate") {
  CHECK(P("-").conjugate() == P("-"));
  CHECK(P("5").conjugate() == P("1,1,1,1,1"));
  CHECK(P("3,2").conjugate() == P("2,2,1"));
  for (const Partition& lam : partitions_up_to(8)) CHECK(lam.conjugate().conjugate() == lam);
}

TEST_CASE("symmetric group dimensions") {
  CHECK(sym_group_dim(P("-")) == 1);
  CHECK(sym_group_dim(P("4")) == 1);
  CHECK(sym_group_dim(P("1,1,1,1")) == 1);
  CHECK(sym_group_dim(P("2,1")) == 2);
  CHECK(sym_group_dim(P("3,2")) == 5);
  for (int n = 0; n <= 8; ++n) {
    mpz_class total = 0, fact;
    for (const Partition& lam : partitions_of(n)) {
      mpz_class d = sym_group_dim(lam);
      total += d * d;
    }
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
    CHECK(total == fact);
  }
}

TEST_CASE("oracle frozen values") {
  CHECK(lr_coeff_oracle(P("2,1"), P("1"), P("1,1")) == 1);
  CHECK(lr_coeff_oracle(P("4,2"), P("2,1"), P("2,1")) == 1);
  CHECK(lr_coeff_oracle(P("3,2,1"), P("2,1"), P("2,1")) == 2);
  CHECK(lr_coeff_oracle(P("2"), P("2"), P("-")) == 1);
  CHECK(lr_coeff_oracle(P("2"), P("1,1"), P("-")) == 0);
  CHECK(lr_coeff_oracle(P("2,2"), P("1"), P("2,1")) == 1);
}

TEST_CASE("fast path matches frozen values") {
  CHECK(lr_coeff(P("3,2,1"), P("2,1"), P("2,1")) == 2);
  CHECK(lr_coeff(P("2,1"), P("1"), P("1,1")) == 1);
  CHECK(lr_coeff(P("4,2"), P("2,1"), P("2,1")) == 1);
  CHECK(lr_coeff(P("2"), P("1"), P("1")) == 1);
  CHECK(lr_coeff(P("1,1"), P("1"), P("1")) == 1);
  CHECK(lr_coeff(P("2,1"), P("2,1"), P("-")) == 1);
  CHECK(lr_coeff(P("3"), P("2"), P("2")) == 0);  // size mismatch
}

TEST_CASE("fast path agrees with oracle exhaustively up to size 5") {
  auto all = partitions_up_to(5);
  for (const Partition& lam : all)
    for (const Partition& mu : all)
      for (const Partition& nu : all) {
        if (mu.size() + nu.size() > lam.size()) continue;
        CHECK(lr_coeff(lam, mu, nu) == lr_coeff_oracle(lam, mu, nu));
      }
}

TEST_CASE("skew route agrees with product route") {
  for (const Partition& lam : partitions_up_to(6))
    for (const Partition& mu : partitions_up_to(lam.size())) {
      if (!lam.contains(mu)) continue;
      SchurExpansion skew = lr_skew(lam, mu);
      mpz_class total = 0;
      for (const auto& [nu, c] : skew) {
        CHECK(c == lr_coeff(lam, mu, nu));
        total += c * sym_group_dim(nu);
      }
      // skew dimension count: number of standard fillings distributes over contents
      if (lam == mu) CHECK(total == 1);
    }
}

TEST_CASE("lr symmetry in the two factors") {
  for (const Partition& lam : partitions_up_to(8)) {
    auto subs = partitions_up_to(lam.size());
    for (const Partition& mu : subs) {
      if (!lam.contains(mu)) continue;
      for (const Partition& nu : partitions_of(lam.size() - mu.size()))
        CHECK(lr_coeff(lam, mu, nu) == lr_coeff(lam, nu, mu));
    }
  }
}

TEST_CASE("lr conjugation symmetry") {
  for (const Partition& lam : partitions_up_to(6)) {
    auto subs = partitions_up_to(lam.size());
    for (const Partition& mu : subs) {
      if (!lam.contains(mu)) continue;
      for (const Partition& nu : partitions_of(lam.size() - mu.size()))
        CHECK(lr_coeff(lam, mu, nu) ==
              lr_coeff(lam.conjugate(), mu.conjugate(), nu.conjugate()));
    }
  }
}

TEST_CASE("multi_lr base cases and frozen values") {
  std::vector<Partition> none;
  CHECK(multi_lr(P("2,1"), none, P("2,1")) == 1);
  CHECK(multi_lr(P("2,1"), none, P("3")) == 0);
  std::vector<Partition> g1{P("1"), P("-")};
  CHECK(multi_lr(P("1"), g1, P("-")) == 1);
  std::vector<Partition> g2{P("1"), P("1")};
  CHECK(multi_lr(P("2,1"), g2, P("1")) == 2);
}

TEST_CASE("multi_lr reduces to lr_coeff for one factor") {
  for (const Partition& lam : partitions_up_to(6))
    for (const Partition& mu : partitions_up_to(lam.size())) {
      if (!lam.contains(mu)) continue;
      for (const Partition& nu : partitions_of(lam.size() - mu.size())) {
        std::vector<Partition> gs{mu};
        CHECK(multi_lr(lam, gs, nu) == lr_coeff(lam, mu, nu));
      }
    }
}

TEST_CASE("multi_lr is independent of factor order") {
  auto gammas = partitions_up_to(2);
  for (const Partition& lam : partitions_up_to(5))
    for (const Partition& g1 : gammas)
      for (const Partition& g2 : gammas)
        for (const Partition& g3 : gammas) {
          int rest = lam.size() - g1.size() - g2.size() - g3.size();
          if (rest < 0) continue;
          for (const Partition& lp : partitions_of(rest)) {
            std::vector<Partition> a{g1, g2, g3}, b{g2, g3, g1}, c{g3, g1, g2};
            mpz_class va = multi_lr(lam, a, lp);
            CHECK(va == multi_lr(lam, b, lp));
            CHECK(va == multi_lr(lam, c, lp));
          }
        }
}
