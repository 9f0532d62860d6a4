#include "isocount/families.hpp"

#include <map>
#include <mutex>
#include <ostream>
#include <stdexcept>

namespace isocount::families {

namespace {

#include "families_data.inc"

using isogeny::IntPolynomial;

IntPolynomial make_poly(const long long* a, std::size_t n) {
  std::vector<mpz_class> c;
  c.reserve(n);
  for (std::size_t i = 0; i < n; ++i) c.emplace_back(static_cast<long>(a[i]));
  return IntPolynomial(std::move(c));
}

#define POLY(name) make_poly(name, sizeof(name) / sizeof(name[0]))

struct Registry {
  std::map<unsigned, FamilySpec> fams;
  std::map<unsigned, std::pair<IntPolynomial, IntPolynomial>> jmaps;
  std::vector<unsigned long long> empty_cubes;
  std::vector<long long> empty_squares;
};

const Registry& registry() {
  static Registry reg = [] {
    Registry r;
    auto add_jmap = [&](unsigned N, IntPolynomial num, IntPolynomial den) {
      r.jmaps.emplace(N, std::make_pair(std::move(num), std::move(den)));
    };
    add_jmap(2, POLY(kJnum2), POLY(kJden2));
    add_jmap(3, POLY(kJnum3), POLY(kJden3));
    add_jmap(4, POLY(kJnum4), POLY(kJden4));
    add_jmap(5, POLY(kJnum5), POLY(kJden5));
    add_jmap(6, POLY(kJnum6), POLY(kJden6));
    add_jmap(8, POLY(kJnum8), POLY(kJden8));
    add_jmap(9, POLY(kJnum9), POLY(kJden9));
    add_jmap(12, POLY(kJnum12), POLY(kJden12));
    add_jmap(16, POLY(kJnum16), POLY(kJden16));
    add_jmap(18, POLY(kJnum18), POLY(kJden18));

    auto add_family = [&](unsigned N, IntPolynomial f, long fden, IntPolynomial g,
                          long gden, unsigned rr, unsigned ss, unsigned mm,
                          unsigned nn, unsigned hh, unsigned ww,
                          std::vector<unsigned long long> j0c,
                          std::vector<long long> j1728c) {
      FamilySpec fs;
      fs.N = N;
      fs.f = std::move(f);
      fs.g = std::move(g);
      fs.f_den = fden;
      fs.g_den = gden;
      fs.r = rr; fs.s = ss; fs.m = mm; fs.n = nn; fs.h = hh; fs.w = ww;
      fs.jmap_num = r.jmaps.at(N).first;
      fs.jmap_den = r.jmaps.at(N).second;
      fs.j0_cube_classes = std::move(j0c);
      fs.j1728_square_classes = std::move(j1728c);
      r.fams.emplace(N, std::move(fs));
    };
    // h = floor(n(m-1)/m), w = max(3h/s, 2h/r); nonzero only for N=3.
    // Fiber twist classes frozen from the family values on the j=0/1728
    // fibers (empty list = no curve with that j has the isogeny).
    add_family(3, POLY(kF3), 3, POLY(kG3), 27, 1, 2, 3, 2, 1, 2, {2}, {});
    add_family(4, POLY(kF4), 1, POLY(kG4), 1, 2, 3, 1, 1, 0, 0, {}, {1});
    add_family(6, POLY(kF6), 1, POLY(kG6), 1, 4, 6, 1, 2, 0, 0, {1}, {});
    add_family(8, POLY(kF8), 1, POLY(kG8), 1, 4, 6, 1, 2, 0, 0, {}, {});
    add_family(9, POLY(kF9), 1, POLY(kG9), 1, 4, 6, 1, 2, 0, 0, {2}, {});
    add_family(12, POLY(kF12), 1, POLY(kG12), 1, 8, 12, 1, 4, 0, 0, {}, {});
    add_family(16, POLY(kF16), 1, POLY(kG16), 1, 8, 12, 1, 4, 0, 0, {}, {});
    add_family(18, POLY(kF18), 1, POLY(kG18), 1, 12, 18, 1, 6, 0, 0, {}, {});
    return r;
  }();
  return reg;
}

}  // namespace

bool family_supported(unsigned N) { return registry().fams.count(N) != 0; }

const FamilySpec& family(unsigned N) {
  const auto& fams = registry().fams;
  auto it = fams.find(N);
  if (it == fams.end()) {
    if (N == 7)
      throw std::domain_error(
          "family(7): unsupported; the level-7 model has f, g with a common "
          "factor (t^2+13t+49), so there is no coprime family");
    throw std::domain_error("family: unsupported level");
  }
  return it->second;
}

std::pair<mpq_class, mpq_class> family_curve(unsigned N, const mpq_class& u,
                                             const mpq_class& t) {
  const FamilySpec& fs = family(N);
  mpq_class fv = fs.f.eval(t) / mpq_class(fs.f_den);
  mpq_class gv = fs.g.eval(t) / mpq_class(fs.g_den);
  fv.canonicalize();
  gv.canonicalize();
  if (4 * fv * fv * fv + 27 * gv * gv == 0)
    throw std::domain_error("family_curve: degenerate fiber (cusp t)");
  mpq_class A = u * u * fv, B = u * u * u * gv;
  A.canonicalize();
  B.canonicalize();
  return {A, B};
}

std::tuple<unsigned, unsigned, unsigned, unsigned, unsigned, unsigned>
table2_invariants(unsigned N) {
  const FamilySpec& fs = family(N);
  return {fs.r, fs.s, fs.m, fs.n, fs.h, fs.w};
}

const isogeny::IntPolynomial& jmap_num(unsigned N) {
  auto it = registry().jmaps.find(N);
  if (it == registry().jmaps.end()) throw std::domain_error("jmap: unsupported level");
  return it->second.first;
}

const isogeny::IntPolynomial& jmap_den(unsigned N) {
  auto it = registry().jmaps.find(N);
  if (it == registry().jmaps.end()) throw std::domain_error("jmap: unsupported level");
  return it->second.second;
}

mpq_class jmap(unsigned N, const mpq_class& t) {
  const auto& num = jmap_num(N);
  const auto& den = jmap_den(N);
  mpq_class d = den.eval(t);
  if (d == 0) throw std::domain_error("jmap: cusp t");
  mpq_class j = num.eval(t) / d;
  j.canonicalize();
  return j;
}

const std::vector<unsigned long long>& j0_cube_classes(unsigned N) {
  return family(N).j0_cube_classes;
}

const std::vector<long long>& j1728_square_classes(unsigned N) {
  return family(N).j1728_square_classes;
}

namespace {
void print_poly(std::ostream& os, const isogeny::IntPolynomial& p) {
  if (p.c.empty()) {
    os << 0;
    return;
  }
  for (std::size_t i = 0; i < p.c.size(); ++i) {
    if (i) os << ' ';
    os << p.c[i];
  }
}
}  // namespace

void dump_registry(std::ostream& os) {
  for (auto& [N, fs] : registry().fams) {
    os << "family " << N << " f_num ";
    print_poly(os, fs.f);
    os << "\nfamily " << N << " f_den " << fs.f_den;
    os << "\nfamily " << N << " g_num ";
    print_poly(os, fs.g);
    os << "\nfamily " << N << " g_den " << fs.g_den;
    os << "\nfamily " << N << " rsmnhw " << fs.r << ' ' << fs.s << ' ' << fs.m
       << ' ' << fs.n << ' ' << fs.h << ' ' << fs.w << '\n';
  }
  for (auto& [N, jm] : registry().jmaps) {
    os << "jmap " << N << " num ";
    print_poly(os, jm.first);
    os << "\njmap " << N << " den ";
    print_poly(os, jm.second);
    os << '\n';
  }
}

}  // namespace isocount::families
