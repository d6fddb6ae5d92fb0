#include <catch2/catch_amalgamated.hpp>

#include "burnside/reference_tables.hpp"
#include "burnside/ring.hpp"

using burnside::BurnsideRing;
using burnside::DecorationFunctor;
using burnside::FiniteGroup;
using burnside::FunctorSpec;
using burnside::Perm;
using burnside::RingElement;
using burnside::SubgroupClassification;

namespace {

struct S4Ring {
  FiniteGroup G = FiniteGroup::symmetric(4);
  SubgroupClassification cls = SubgroupClassification::classify(G, all_subgroups(G));
  DecorationFunctor mu{G, cls, FunctorSpec::builtin_mu("S4")};
  BurnsideRing ring{G, cls, mu};
};

const S4Ring& s4() {
  static S4Ring r;
  return r;
}

}  // namespace

TEST_CASE("basis of the decorated S4 ring in print order") {
  const BurnsideRing& R = s4().ring;
  REQUIRE(R.n_basis() == 16);
  const auto& want = burnside::reference::s4_basis_labels();
  for (int i = 0; i < 16; ++i) CHECK(R.basis(i).label == want[static_cast<std::size_t>(i)]);
  CHECK(R.find_label("K1'") == 11);
  CHECK_THROWS_AS(R.find_label("K3"), std::invalid_argument);
}

TEST_CASE("whole-group basis element is the identity") {
  const BurnsideRing& R = s4().ring;
  const RingElement one = R.one();
  CHECK(R.to_string(one) == "S4");
  for (int i = 0; i < R.n_basis(); ++i) {
    const RingElement x{{i, 1}};
    CHECK(R.multiply(one, x) == x);
    CHECK(R.multiply(x, one) == x);
  }
}

TEST_CASE("extended mark table of the S4 multiplier ring") {
  const BurnsideRing& R = s4().ring;
  const auto table = R.extended_table_of_marks();
  const auto& want = burnside::reference::s4_extended_marks();
  REQUIRE(table.marks.size() == 16);
  REQUIRE(table.column_labels == burnside::reference::s4_basis_labels());
  REQUIRE(table.row_labels == table.column_labels);
  for (std::size_t i = 0; i < 16; ++i) {
    REQUIRE(table.marks[i].size() == 16);
    for (std::size_t j = 0; j < 16; ++j) {
      INFO("row " << table.row_labels[i] << " column " << table.column_labels[j]);
      CHECK(table.marks[i][j] == want[i][j]);
    }
    CHECK(table.orbit_counts[i] == want[i][16]);
  }
  CHECK(table.nonsingular());
  CHECK(table.to_csv().rfind(",1,H2,C2,C3,C4,S3,K1,K2,D8,A4,S4,K1',K2',D8',A4',S4',M\n1,24,", 0) == 0);
  CHECK(table.to_json()["marks"][10][15] == 1);
}

TEST_CASE("mark values quoted for single entries") {
  const BurnsideRing& R = s4().ring;
  const auto& cls = s4().cls;
  const int c1 = cls.find_label("1"), c2 = cls.find_label("C2"), k1 = cls.find_label("K1");
  const int d8 = cls.find_label("D8");
  CHECK(R.mark(c1, 0, R.element("1")) == 24);
  CHECK(R.mark(c2, 0, R.element("S3")) == 2);
  CHECK(R.mark(k1, 1, R.element("D8'")) == 1);
  CHECK(R.mark(d8, 1, R.element("D8'")) == -1);
}

TEST_CASE("diagonal primed marks are negated relative normalizer orders") {
  const BurnsideRing& R = s4().ring;
  const auto& G = s4().G;
  const auto& cls = s4().cls;
  for (const char* l : {"K1", "K2", "D8", "A4", "S4"}) {
    const int c = cls.find_label(l);
    const auto norm = G.normalizer(cls.cls(c).rep.elems);
    const long long expect = -static_cast<long long>(norm.size() / cls.cls(c).rep.order());
    CHECK(R.mark(c, 1, R.element(std::string(l) + "'")) == expect);
  }
}

TEST_CASE("ring is commutative and associative on the whole basis") {
  const BurnsideRing& R = s4().ring;
  std::vector<RingElement> b;
  for (int i = 0; i < R.n_basis(); ++i) b.push_back(RingElement{{i, 1}});
  for (int i = 0; i < R.n_basis(); ++i)
    for (int j = i; j < R.n_basis(); ++j) CHECK(R.multiply(b[i], b[j]) == R.multiply(b[j], b[i]));
  for (int i = 0; i < R.n_basis(); ++i)
    for (int j = 0; j < R.n_basis(); ++j)
      for (int k = 0; k < R.n_basis(); ++k)
        REQUIRE(R.multiply(R.multiply(b[i], b[j]), b[k]) == R.multiply(b[i], R.multiply(b[j], b[k])));
}

TEST_CASE("every mark is a ring homomorphism") {
  const BurnsideRing& R = s4().ring;
  const auto table = R.extended_table_of_marks();
  const RingElement one = R.one();
  // columns enumerate as (class, chi): recover the pairs from basis order,
  // which coincides with column order for the builtin
  std::vector<std::pair<int, int>> cols;
  for (int i = 0; i < R.n_basis(); ++i) cols.emplace_back(R.basis(i).class_id, R.basis(i).frill == 0 ? 0 : 1);
  for (const auto& [a, chi] : cols) CHECK(R.mark(a, chi, one) == 1);
  for (int i = 0; i < R.n_basis(); ++i)
    for (int j = i; j < R.n_basis(); ++j) {
      const RingElement p = R.multiply(RingElement{{i, 1}}, RingElement{{j, 1}});
      for (const auto& [a, chi] : cols)
        REQUIRE(R.mark(a, chi, p) ==
                R.mark(a, chi, RingElement{{i, 1}}) * R.mark(a, chi, RingElement{{j, 1}}));
    }
}

TEST_CASE("duality fixes the elementary abelian multiplier") {
  const BurnsideRing& R = s4().ring;
  for (int i = 0; i < R.n_basis(); ++i) {
    const RingElement x{{i, 1}};
    CHECK(R.dual(x) == x);
    CHECK(R.dual(R.dual(x)) == x);
  }
}

TEST_CASE("candidate products quoted in the cell analysis") {
  const BurnsideRing& R = s4().ring;
  const auto Y = [&](long long e) {
    return R.parse(std::to_string(15 + e) + "*S4 + " + std::to_string(17 - e) + "*S3 + " + std::to_string(9 - e) +
                   "*D8 + C2 + " + std::to_string(e) + "*K1");
  };
  const auto X = [&](long long e) {
    return R.parse(std::to_string(13 + e) + "*S4 + " + std::to_string(19 - e) + "*S3 + " + std::to_string(9 - e) +
                   "*D8 + C4 + " + std::to_string(e) + "*K1");
  };
  for (long long e : {0LL, 6LL, 9LL}) {
    const RingElement yc2 = R.multiply(Y(e), R.element("C2"));
    CHECK(R.to_string(yc2) == "31*1 + 60*C2");
    CHECK(R.euler(yc2) == 151);
    const RingElement xc4 = R.multiply(X(e), R.element("C4"));
    CHECK(R.to_string(xc4) == "20*1 + 9*H2 + 24*C4");
    CHECK(R.euler(xc4) == 134);
  }
  CHECK(R.euler(Y(6)) == 179);
  const RingElement ys3 = R.multiply(Y(0), R.element("S3"));
  CHECK(R.to_string(ys3) == "1 + 28*C2 + 32*S3");
  CHECK(R.euler(ys3) == 153);
}

TEST_CASE("euler and simple counts") {
  const BurnsideRing& R = s4().ring;
  CHECK(R.euler(R.element("S4'")) == 3);
  CHECK(R.euler(RingElement{}) == 0);
  CHECK(R.fun_simple_count(R.element("S4"), R.element("S4")) == 5);
  CHECK(R.fun_simple_count(R.element("S3"), R.element("S3")) == 5);
  CHECK(R.fun_simple_count(R.element("S4'"), R.element("S4'")) == 5);
  for (int i = 0; i < R.n_basis(); ++i)
    CHECK(R.fun_simple_count(R.one(), RingElement{{i, 1}}) == R.euler(RingElement{{i, 1}}));
  CHECK_THROWS_AS(R.fun_simple_count(R.parse("S4 - S3"), R.one()), std::invalid_argument);
  CHECK(BurnsideRing::is_effective(RingElement{}));
  CHECK(BurnsideRing::is_effective(R.parse("2*S4 + K1'")));
  CHECK_FALSE(BurnsideRing::is_effective(R.parse("S4 - S3")));
}

TEST_CASE("omega forgets frills") {
  const BurnsideRing& R = s4().ring;
  using V = std::vector<long long>;
  CHECK(R.omega(R.element("S4")) == V{1, 0, 0, 0, 0});
  CHECK(R.omega(R.element("S3")) == V{1, 1, 0, 0, 0});
  CHECK(R.omega(R.element("K1'")) == R.omega(R.element("K1")));
  CHECK(R.omega(R.element("1")) == V{1, 3, 2, 3, 1});
  // additive over sums, multiplicative over products as class functions
  const RingElement p = R.multiply(R.element("C2"), R.element("C3"));
  const auto lhs = R.omega(p);
  // product character values = componentwise product; verify via decompose
  const auto& G = s4().G;
  const auto& cls = s4().cls;
  const auto chi1 = burnside::permutation_character(G, cls.cls(cls.find_label("C2")).rep.elems);
  const auto chi2 = burnside::permutation_character(G, cls.cls(cls.find_label("C3")).rep.elems);
  std::vector<long long> prod(chi1.size());
  for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = chi1[i] * chi2[i];
  CHECK(lhs == burnside::CharacterTable::symmetric(4).decompose(prod));
}

TEST_CASE("canonicalize conjugate subgroups") {
  const BurnsideRing& R = s4().ring;
  const auto& G = s4().G;
  const auto& cls = s4().cls;
  std::vector<int> whole(G.order());
  std::iota(whole.begin(), whole.end(), 0);
  CHECK(R.canonicalize(whole, 0).label == "S4");
  CHECK(R.canonicalize(whole, 1).label == "S4'");
  for (const auto& member : cls.cls(cls.find_label("K1")).members) {
    CHECK(R.canonicalize(member.elems, 1).label == "K1'");
    CHECK(R.canonicalize(member.elems, 0).label == "K1");
  }
}

TEST_CASE("element parsing and serialization") {
  const BurnsideRing& R = s4().ring;
  const RingElement x = R.parse("21*S4 + 6*K1'");
  CHECK(x == RingElement{{R.find_label("S4"), 21}, {R.find_label("K1'"), 6}});
  CHECK(R.to_string(x) == "21*S4 + 6*K1'");
  CHECK(R.parse(R.to_string(x)) == x);
  CHECK(R.parse("S4 - S3") == RingElement{{R.find_label("S3"), -1}, {R.find_label("S4"), 1}});
  CHECK(R.parse("0").empty());
  CHECK(R.to_string(RingElement{}) == "0");
  CHECK(R.parse("-2*D8 + D8") == RingElement{{R.find_label("D8"), -1}});
  // the trivial orbit prints as a bare "1" and must parse back
  CHECK(R.parse("1 + 2*C2") == RingElement{{R.find_label("1"), 1}, {R.find_label("C2"), 2}});
  CHECK(R.parse(R.to_string(R.parse("1 + 2*C2"))) == R.parse("1 + 2*C2"));
  CHECK_THROWS_AS(R.parse("2 S4"), std::invalid_argument);
  CHECK_THROWS_AS(R.parse("K3"), std::invalid_argument);
  CHECK_THROWS_AS(R.parse(""), std::invalid_argument);

  const nlohmann::json j = R.to_json(x);
  CHECK(j == nlohmann::json{{"S4", 21}, {"K1'", 6}});
  CHECK(R.from_json(j) == x);
}

TEST_CASE("trivial decoration reproduces the classical table of marks") {
  const auto& G = s4().G;
  const auto& cls = s4().cls;
  DecorationFunctor triv(G, cls, FunctorSpec::builtin_trivial("S4"));
  BurnsideRing R(G, cls, triv);
  REQUIRE(R.n_basis() == 11);
  const auto table = R.extended_table_of_marks();
  const auto& want = burnside::reference::s4_extended_marks();
  for (std::size_t i = 0; i < 11; ++i)
    for (std::size_t j = 0; j < 11; ++j) CHECK(table.marks[i][j] == want[i][j]);
  CHECK(table.nonsingular());
}

TEST_CASE("order-4 frills: duality moves, marks refuse") {
  const auto& G = s4().G;
  const auto& cls = s4().cls;
  FunctorSpec spec = FunctorSpec::load(std::string(BURNSIDE_TESTDATA_DIR) + "/c4_frill_s4.json");
  DecorationFunctor f(G, cls, spec);
  BurnsideRing R(G, cls, f);
  REQUIRE(R.n_basis() == 13);
  CHECK(R.basis(11).label == "C4'1");
  CHECK(R.basis(12).label == "C4'2");
  // the normalizer inverts the 4-cycle, so 1 and 3 share an orbit
  CHECK(R.basis_index(cls.find_label("C4"), 3) == 11);
  CHECK(R.dual(R.element("C4'1")) == R.element("C4'1"));
  CHECK(R.dual(R.element("C4'2")) == R.element("C4'2"));
  CHECK_THROWS_AS(R.extended_table_of_marks(), std::invalid_argument);
  CHECK_THROWS_AS(R.euler(R.element("C4'1")), std::invalid_argument);
  // products remain well defined without marks
  const RingElement sq = R.multiply(R.element("C4'1"), R.element("C4'1"));
  CHECK(R.multiply(R.element("C4'1"), R.element("C4'2")) ==
        R.multiply(R.element("C4'2"), R.element("C4'1")));
  CHECK_FALSE(sq.empty());
}
