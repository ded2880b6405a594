#include <doctest.h>

#include <map>
#include <set>
#include <string>

#include "gk/catalog.hpp"

using namespace gk;

namespace {

  Nat dec(char const* s) {
    return Nat(s);
  }

  // Test-side order formulas, written out per family without sharing code
  // with the catalog. Non-simple parameter choices are skipped.
  Nat ipow(Nat const& b, unsigned e) {
    Nat r = 1;
    for (unsigned i = 0; i < e; ++i) {
      r *= b;
    }
    return r;
  }

  Nat gcd_nat(Nat a, Nat b) {
    while (b != 0) {
      Nat t = a % b;
      a     = b;
      b     = t;
    }
    return a;
  }

  Nat product_minus(Nat const& q, std::initializer_list<unsigned> exps) {
    Nat r = 1;
    for (unsigned e : exps) {
      r *= ipow(q, e) - 1;
    }
    return r;
  }

  struct Candidate {
    std::string name;
    Nat         order;
  };

  std::string qtext(std::uint64_t r, unsigned k) {
    Nat q = ipow(Nat(r), k);
    if (k == 1 || q < 100) {
      return q.str();
    }
    return std::to_string(r) + "^" + std::to_string(k);
  }

  std::vector<Candidate> all_lie_orders(std::uint64_t r, unsigned k, unsigned max_rank) {
    std::vector<Candidate> out;
    Nat const   q  = ipow(Nat(r), k);
    std::string qs = "(" + qtext(r, k) + ")";
    auto add = [&](std::string name, Nat order) { out.push_back({name + qs, order}); };

    for (unsigned n = 2; n <= max_rank + 1; ++n) {
      if (n == 2 && (q == 2 || q == 3)) {
        continue;
      }
      Nat o = ipow(q, n * (n - 1) / 2);
      for (unsigned i = 2; i <= n; ++i) {
        o *= ipow(q, i) - 1;
      }
      add("L" + std::to_string(n), o / gcd_nat(n, q - 1));
    }
    for (unsigned n = 3; n <= max_rank + 1; ++n) {
      if (n == 3 && q == 2) {
        continue;
      }
      Nat o = ipow(q, n * (n - 1) / 2);
      for (unsigned i = 2; i <= n; ++i) {
        o *= (i % 2 == 0) ? ipow(q, i) - 1 : ipow(q, i) + 1;
      }
      add("U" + std::to_string(n), o / gcd_nat(n, q + 1));
    }
    for (unsigned m = 2; m <= max_rank; ++m) {
      if (m == 2 && q == 2) {
        continue;
      }
      Nat o = ipow(q, m * m);
      for (unsigned i = 1; i <= m; ++i) {
        o *= ipow(q, 2 * i) - 1;
      }
      o /= gcd_nat(2, q - 1);
      add("S" + std::to_string(2 * m), o);
      if (m >= 3 && r % 2 == 1) {
        add("O" + std::to_string(2 * m + 1), o);
      }
    }
    for (unsigned m = 4; m <= max_rank; ++m) {
      Nat base = ipow(q, m * (m - 1));
      for (unsigned i = 1; i < m; ++i) {
        base *= ipow(q, 2 * i) - 1;
      }
      Nat qm = ipow(q, m);
      add("O+" + std::to_string(2 * m), base * (qm - 1) / gcd_nat(4, qm - 1));
      add("O-" + std::to_string(2 * m), base * (qm + 1) / gcd_nat(4, qm + 1));
    }
    if (q >= 3 && max_rank >= 2) {
      add("G2", ipow(q, 6) * product_minus(q, {6, 2}));
    }
    if (max_rank >= 4) {
      add("F4", ipow(q, 24) * product_minus(q, {12, 8, 6, 2}));
      add("3D4", ipow(q, 12) * (ipow(q, 8) + ipow(q, 4) + 1) * product_minus(q, {6, 2}));
    }
    if (max_rank >= 6) {
      add("E6", ipow(q, 36) * product_minus(q, {12, 9, 8, 6, 5, 2}) / gcd_nat(3, q - 1));
      add("2E6", ipow(q, 36) * product_minus(q, {12, 8, 6, 2}) * (ipow(q, 9) + 1)
                     * (ipow(q, 5) + 1) / gcd_nat(3, q + 1));
    }
    if (max_rank >= 7) {
      add("E7", ipow(q, 63) * product_minus(q, {2, 6, 8, 10, 12, 14, 18})
                    / gcd_nat(2, q - 1));
    }
    if (max_rank >= 8) {
      add("E8", ipow(q, 120) * product_minus(q, {2, 8, 12, 14, 18, 20, 24, 30}));
    }
    if (r == 2 && k % 2 == 1 && k >= 3) {
      add("2B2", q * q * (q * q + 1) * (q - 1));
      if (max_rank >= 4) {
        add("2F4", ipow(q, 12) * (ipow(q, 6) + 1) * (ipow(q, 4) - 1) * (ipow(q, 3) + 1)
                       * (q - 1));
      }
    }
    if (r == 3 && k % 2 == 1 && k >= 3) {
      add("2G2", ipow(q, 3) * (ipow(q, 3) + 1) * (q - 1));
    }
    return out;
  }

  bool smooth_with_top(Nat n, std::uint64_t p) {
    if (n % p != 0) {
      return false;
    }
    for (std::uint64_t d = 2; d <= p; ++d) {
      while (n % d == 0) {
        n /= d;
      }
    }
    return n == 1;
  }

  std::map<std::string, std::string> const kAliases = {
      {"L2(4)", "A5"}, {"L2(5)", "A5"},   {"L2(9)", "A6"},
      {"L3(2)", "L2(7)"}, {"L4(2)", "A8"}, {"S4(3)", "U4(2)"}};

  // Brute-force S_p: scan every family with q <= 2^12 and Lie rank <= 12,
  // alternating degrees up to 60, and the sporadic decimal orders.
  std::set<std::string> brute_force_S_p(std::uint64_t p,
                                        std::map<std::string, Nat> const& sporadic) {
    std::set<std::string> out;
    auto                  take = [&](std::string const& name, Nat const& order) {
      if (smooth_with_top(order, p)) {
        auto it = kAliases.find(name);
        out.insert(it == kAliases.end() ? name : it->second);
      }
    };
    for (std::uint64_t r = 2; r <= p; ++r) {
      bool prime = true;
      for (std::uint64_t d = 2; d * d <= r; ++d) {
        prime = prime && r % d != 0;
      }
      if (!prime) {
        continue;
      }
      for (unsigned k = 1; ipow(Nat(r), k) <= 4096; ++k) {
        for (auto const& c : all_lie_orders(r, k, 12)) {
          take(c.name, c.order);
        }
      }
    }
    Nat an = 60;
    for (unsigned n = 5; n <= 60; ++n) {
      if (n > 5) {
        an *= n;
      }
      take("A" + std::to_string(n), an);
    }
    for (auto const& [name, order] : sporadic) {
      take(name, order);
    }
    return out;
  }

  std::map<std::string, Nat> const& sporadic_decimal() {
    static std::map<std::string, Nat> const t = {
        {"M11", dec("7920")},
        {"M12", dec("95040")},
        {"J1", dec("175560")},
        {"M22", dec("443520")},
        {"J2", dec("604800")},
        {"M23", dec("10200960")},
        {"HS", dec("44352000")},
        {"J3", dec("50232960")},
        {"M24", dec("244823040")},
        {"McL", dec("898128000")},
        {"He", dec("4030387200")},
        {"Ru", dec("145926144000")},
        {"Suz", dec("448345497600")},
        {"ON", dec("460815505920")},
        {"Co3", dec("495766656000")},
        {"Co2", dec("42305421312000")},
        {"Fi22", dec("64561751654400")},
        {"HN", dec("273030912000000")},
        {"Ly", dec("51765179004000000")},
        {"Th", dec("90745943887872000")},
        {"Fi23", dec("4089470473293004800")},
        {"Co1", dec("4157776806543360000")},
        {"J4", dec("86775571046077562880")},
        {"Fi24'", dec("1255205709190661721292800")},
        {"B", dec("4154781481226426191177580544000000")},
        {"M", dec("808017424794512875886459904961710757005754368000000000")},
        {"2F4(2)'", dec("17971200")},
    };
    return t;
  }

  std::set<std::string> names(std::vector<GroupId> const& gs) {
    std::set<std::string> out;
    for (auto const& g : gs) {
      out.insert(g.to_string());
    }
    return out;
  }
}  // namespace

TEST_CASE("GroupId text round trip") {
  for (char const* s : {"A5", "A40", "L2(37)", "L2(31^2)", "L2(11^3)", "U3(27)", "U4(31)",
                        "S4(31)", "G2(11)", "2G2(27)", "O7(3)", "O+8(2)", "O-10(2)",
                        "3D4(2)", "2E6(2)", "E8(2)", "2B2(8)", "2F4(8)", "M", "Fi24'",
                        "2F4(2)'"}) {
    CAPTURE(s);
    GroupId g = GroupId::parse(s);
    CHECK(g.to_string() == s);
    CHECK_NOTHROW(g.validate());
  }
  CHECK(GroupId::parse("Alt(7)") == GroupId::alternating(7));
  CHECK(GroupId::parse("U3(27)") == GroupId::lie(Family::Unitary, 3, 3, 3));
  CHECK(GroupId::from_selector("U3", "27") == GroupId::parse("U3(27)"));
  CHECK(GroupId::from_selector("A", "38") == GroupId::alternating(38));
  CHECK_THROWS(GroupId::parse("X5(2)"));
  CHECK_THROWS(GroupId::parse("L2(6)"));
}

TEST_CASE("GroupId simplicity constraints") {
  for (char const* s : {"A4", "L2(2)", "L2(3)", "U3(2)", "S4(2)", "G2(2)", "2B2(2)",
                        "2G2(3)", "O7(2)", "S5(3)", "O+6(2)"}) {
    CAPTURE(s);
    CHECK_THROWS_AS(GroupId::parse(s).validate(), ParameterError);
  }
}

TEST_CASE("order_of examples") {
  CHECK(order_of(GroupId::parse("U3(27)"))
        == Factorization{{2, 5}, {3, 9}, {7, 2}, {13, 1}, {19, 1}, {37, 1}});
  CHECK(order_of(GroupId::parse("S4(31)"))
        == Factorization{{2, 12}, {3, 2}, {5, 2}, {13, 1}, {31, 4}, {37, 1}});
  CHECK(order_of(GroupId::alternating(5)) == Factorization{{2, 2}, {3, 1}, {5, 1}});
  CHECK(order_of(GroupId::parse("G2(11)"))
        == Factorization{{2, 6}, {3, 3}, {5, 2}, {7, 1}, {11, 6}, {19, 1}, {37, 1}});
  CHECK(order_of(GroupId::parse("U4(31)"))
        == Factorization{{2, 16}, {3, 2}, {5, 2}, {7, 2}, {13, 1}, {19, 1}, {31, 6}, {37, 1}});
}

TEST_CASE("order_of against published decimal orders") {
  std::map<std::string, char const*> const known = {
      {"L2(7)", "168"},
      {"L3(4)", "20160"},
      {"A8", "20160"},
      {"U4(2)", "25920"},
      {"S4(3)", "25920"},
      {"G2(3)", "4245696"},
      {"2B2(8)", "29120"},
      {"2B2(32)", "32537600"},
      {"2G2(27)", "10073444472"},
      {"O+8(2)", "174182400"},
      {"O-8(2)", "197406720"},
      {"S6(2)", "1451520"},
      {"O7(3)", "4585351680"},
      {"U3(3)", "6048"},
      {"U3(5)", "126000"},
      {"U4(3)", "3265920"},
      {"U5(2)", "13685760"},
      {"U6(2)", "9196830720"},
      {"S4(4)", "979200"},
      {"L5(2)", "9999360"},
      {"L4(3)", "6065280"},
      {"S8(2)", "47377612800"},
      {"3D4(2)", "211341312"},
      {"F4(2)", "3311126603366400"},
      {"E6(2)", "214841575522005575270400"},
      {"2E6(2)", "76532479683774853939200"},
      {"2F4(8)", "264905352699586176614400"},
  };
  for (auto const& [name, value] : known) {
    CAPTURE(name);
    Factorization f = order_of(GroupId::parse(name));
    CHECK(f.complete());
    CHECK(f.value() == dec(value));
  }
}

TEST_CASE("sporadic table against decimal orders") {
  auto const& t = sporadic_decimal();
  CHECK(sporadic_names().size() == 27);
  for (auto const& name : sporadic_names()) {
    CAPTURE(name);
    REQUIRE(t.contains(name));
    CHECK(sporadic_order(name).value() == t.at(name));
    CHECK(order_of(GroupId::sporadic(name)) == sporadic_order(name));
  }
  CHECK(sporadic_order("M11") == Factorization{{2, 4}, {3, 2}, {5, 1}, {11, 1}});
  CHECK(sporadic_order("M22") == Factorization{{2, 7}, {3, 2}, {5, 1}, {7, 1}, {11, 1}});
  CHECK(sporadic_order("J2") == Factorization{{2, 7}, {3, 3}, {5, 2}, {7, 1}});
  CHECK_THROWS_AS(sporadic_order("M13"), ParameterError);
}

TEST_CASE("embedded tables keep the record format") {
  std::size_t lines = 0;
  for (char c : sporadic_order_table()) {
    lines += c == '\n';
  }
  CHECK(lines == 27);
  CHECK(sporadic_order_table().starts_with("M11|2^4*3^2*5*11\n"));
  CHECK(coincidences().size() == 6);
  CHECK(canonical(GroupId::parse("L2(4)")) == GroupId::alternating(5));
  CHECK(canonical(GroupId::parse("S4(3)")) == GroupId::parse("U4(2)"));
  CHECK(canonical(GroupId::parse("U3(27)")) == GroupId::parse("U3(27)"));
  // Aliases really are isomorphic up to order.
  for (auto const& c : coincidences()) {
    CHECK(order_of(c.alias) == order_of(c.canonical));
  }
}

TEST_CASE("|A_n| = n |A_{n-1}|") {
  for (unsigned n = 6; n <= 100; ++n) {
    CHECK(order_of(GroupId::alternating(n)).value()
          == order_of(GroupId::alternating(n - 1)).value() * n);
  }
}

TEST_CASE("order_of with a bound stops at the first large prime") {
  auto f = order_of(GroupId::alternating(41), 37);
  CHECK_FALSE(f.complete());
  CHECK(order_of(GroupId::alternating(40), 37).complete());
  // Unbounded version factors a 48-digit Monster completely.
  CHECK(order_of(GroupId::sporadic("M")).largest_prime() == 71);
}

TEST_CASE("enumerate S_37 under default caps") {
  Enumeration e = enumerate_S_p(37);
  CHECK(e.groups == reference_S37());
  CHECK(names(e.groups)
        == std::set<std::string>{"L2(37)", "U3(11)", "L2(31^2)", "S4(31)", "2G2(27)",
                                 "U3(27)", "L2(11^3)", "G2(11)", "U4(31)", "A37", "A38",
                                 "A39", "A40"});
  CHECK(e.caps == SearchCaps{});
  for (auto const& g : e.groups) {
    auto f = order_of(g);
    CHECK(is_smooth(f.value(), 37));
    CHECK(f.exponent(37) > 0);
  }
}

TEST_CASE("enumerate small primes") {
  CHECK(enumerate_S_p(2).groups.empty());
  CHECK(enumerate_S_p(3).groups.empty());
  CHECK(names(enumerate_S_p(5).groups) == std::set<std::string>{"A5", "A6", "U4(2)"});
}

TEST_CASE("enumeration matches a brute-force family scan") {
  for (std::uint64_t p : {5, 7, 11, 13, 17, 19, 23, 31, 37}) {
    CAPTURE(p);
    CHECK(names(enumerate_S_p(p).groups) == brute_force_S_p(p, sporadic_decimal()));
  }
}

TEST_CASE("enumeration is monotone in caps") {
  SearchCaps small;
  small.max_field_exponent = 2;
  small.max_rank           = 2;
  small.max_alt_degree     = 38;
  auto a = enumerate_S_p(37, small).groups;
  auto b = enumerate_S_p(37).groups;
  CHECK(std::includes(b.begin(), b.end(), a.begin(), a.end()));
  CHECK(names(a) == std::set<std::string>{"L2(37)", "U3(11)", "L2(31^2)", "S4(31)",
                                          "G2(11)", "A37", "A38"});
}

TEST_CASE("SearchCaps text format") {
  SearchCaps c = SearchCaps::parse("# comment\nmax_prime = 41\n\nmax_rank=3\n");
  CHECK(c.max_prime == 41);
  CHECK(c.max_rank == 3);
  CHECK(c.max_field_exponent == 20);
  CHECK(SearchCaps::parse(c.to_text()) == c);
  CHECK_THROWS_AS(SearchCaps::parse("max_prim = 3"), ParameterError);
  CHECK_THROWS_AS(SearchCaps::parse("max_prime = 0"), ParameterError);
  CHECK_THROWS_AS(SearchCaps::parse("max_prime = x"), ParameterError);
}

TEST_CASE("out_primes_bounded") {
  CHECK(out_primes_bounded(GroupId::parse("U4(31)")));
  CHECK(out_primes_bounded(GroupId::parse("G2(11)")));
  CHECK(out_primes_bounded(GroupId::alternating(40)));
  CHECK_THROWS_AS(out_primes_bounded(GroupId::sporadic("M")), ScopeError);
  CHECK_THROWS_AS(out_primes_bounded(GroupId::alternating(101)), ScopeError);
}
