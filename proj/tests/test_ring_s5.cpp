#include <catch2/catch_amalgamated.hpp>

#include "burnside/reference_tables.hpp"
#include "burnside/ring.hpp"

using burnside::BurnsideRing;
using burnside::DecorationFunctor;
using burnside::FiniteGroup;
using burnside::FunctorSpec;
using burnside::RingElement;
using burnside::SubgroupClassification;

namespace {

struct S5Ring {
  FiniteGroup G = FiniteGroup::symmetric(5);
  SubgroupClassification cls = SubgroupClassification::classify(G, all_subgroups(G));
  DecorationFunctor mu{G, cls, FunctorSpec::builtin_mu("S5")};
  BurnsideRing ring{G, cls, mu};
};

const S5Ring& s5() {
  static S5Ring r;
  return r;
}

}  // namespace

TEST_CASE("basis of the decorated S5 ring in print order") {
  const BurnsideRing& R = s5().ring;
  REQUIRE(R.n_basis() == 27);
  const auto& want = burnside::reference::s5_basis_labels();
  for (int i = 0; i < 27; ++i) CHECK(R.basis(i).label == want[static_cast<std::size_t>(i)]);
  CHECK(R.to_string(R.one()) == "S5");
}

TEST_CASE("extended mark table of the S5 multiplier ring") {
  const BurnsideRing& R = s5().ring;
  const auto table = R.extended_table_of_marks();
  const auto& want = burnside::reference::s5_extended_marks();
  REQUIRE(table.marks.size() == 27);
  REQUIRE(table.column_labels == burnside::reference::s5_basis_labels());
  for (std::size_t i = 0; i < 27; ++i) {
    REQUIRE(table.marks[i].size() == 27);
    for (std::size_t j = 0; j < 27; ++j) {
      INFO("row " << table.row_labels[i] << " column " << table.column_labels[j]);
      CHECK(table.marks[i][j] == want[i][j]);
    }
    CHECK(table.orbit_counts[i] == want[i][27]);
  }
  CHECK(table.nonsingular());
}

TEST_CASE("orbit counts of decorated S5 classes") {
  const BurnsideRing& R = s5().ring;
  CHECK(R.euler(R.element("A4")) == 4);
  CHECK(R.euler(R.element("A5")) == 5);
  CHECK(R.euler(R.element("A5'")) == 4);
  CHECK(R.euler(R.element("S5'")) == 5);
  CHECK(R.euler(R.element("S3xC2'")) == 3);
  CHECK(R.euler(R.element("S3xC2")) == 6);
}

TEST_CASE("identity and commutativity over the S5 basis") {
  const BurnsideRing& R = s5().ring;
  const RingElement one = R.one();
  for (int i = 0; i < R.n_basis(); ++i) {
    const RingElement x{{i, 1}};
    REQUIRE(R.multiply(one, x) == x);
  }
  for (int i = 0; i < R.n_basis(); ++i)
    for (int j = i + 1; j < R.n_basis(); ++j)
      REQUIRE(R.multiply(RingElement{{i, 1}}, RingElement{{j, 1}}) ==
              R.multiply(RingElement{{j, 1}}, RingElement{{i, 1}}));
}

TEST_CASE("associativity on strided S5 triples") {
  const BurnsideRing& R = s5().ring;
  int checked = 0;
  for (int i = 0; i < R.n_basis(); ++i)
    for (int j = 0; j < R.n_basis(); ++j)
      for (int k = 0; k < R.n_basis(); ++k) {
        if ((i + 2 * j + 5 * k) % 9 != 0) continue;
        const RingElement x{{i, 1}}, y{{j, 1}}, z{{k, 1}};
        REQUIRE(R.multiply(R.multiply(x, y), z) == R.multiply(x, R.multiply(y, z)));
        ++checked;
      }
  CHECK(checked > 2000);
}

TEST_CASE("marks are homomorphisms on strided S5 pairs") {
  const BurnsideRing& R = s5().ring;
  std::vector<std::pair<int, int>> cols;
  for (int i = 0; i < R.n_basis(); ++i) cols.emplace_back(R.basis(i).class_id, R.basis(i).frill == 0 ? 0 : 1);
  for (const auto& [a, chi] : cols) REQUIRE(R.mark(a, chi, R.one()) == 1);
  for (int i = 0; i < R.n_basis(); ++i)
    for (int j = i; j < R.n_basis(); ++j) {
      if ((3 * i + j) % 7 != 0) continue;
      const RingElement p = R.multiply(RingElement{{i, 1}}, RingElement{{j, 1}});
      for (const auto& [a, chi] : cols)
        REQUIRE(R.mark(a, chi, p) ==
                R.mark(a, chi, RingElement{{i, 1}}) * R.mark(a, chi, RingElement{{j, 1}}));
    }
}

TEST_CASE("duality fixes the S5 multiplier basis") {
  const BurnsideRing& R = s5().ring;
  for (int i = 0; i < R.n_basis(); ++i) CHECK(R.dual(RingElement{{i, 1}}) == RingElement{{i, 1}});
}

TEST_CASE("omega over S5") {
  const BurnsideRing& R = s5().ring;
  using V = std::vector<long long>;
  CHECK(R.omega(R.element("S5")) == V{1, 0, 0, 0, 0, 0, 0});
  CHECK(R.omega(R.element("S4")) == V{1, 1, 0, 0, 0, 0, 0});
  CHECK(R.omega(R.element("A5")) == V{1, 0, 0, 0, 0, 0, 1});
  CHECK(R.omega(R.element("A5'")) == R.omega(R.element("A5")));
  // cosets of the Young subgroup decompose by Kostka numbers of (3,2)
  CHECK(R.omega(R.element("S3xC2")) == V{1, 1, 1, 0, 0, 0, 0});
  CHECK(R.omega(R.parse("5*S4 + 2*S3xC2")) == V{7, 7, 2, 0, 0, 0, 0});
}
