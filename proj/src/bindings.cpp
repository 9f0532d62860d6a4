// Python bindings for the main operations.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "isocount/analytic.hpp"
#include "isocount/cli.hpp"
#include "isocount/counting.hpp"
#include "isocount/curves.hpp"
#include "isocount/families.hpp"
#include "isocount/isogeny.hpp"
#include "isocount/numtheory.hpp"

namespace py = pybind11;
using namespace isocount;

namespace {

// exact rationals cross the boundary as (numerator, denominator) string pairs
// to avoid precision loss; python callers can wrap them in fractions.Fraction
py::tuple q_to_py(const mpq_class& q) {
  return py::make_tuple(py::int_(py::str(q.get_num().get_str())),
                        py::int_(py::str(q.get_den().get_str())));
}

mpq_class py_to_q(long long num, long long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  mpq_class q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return q;
}

curves::Curve mk(long long A, long long B) {
  return curves::make_curve(mpz_class(static_cast<long>(A)), mpz_class(static_cast<long>(B)));
}

py::dict result_to_dict(const counting::CensusResult& r) {
  py::dict d;
  d["N"] = r.N;
  d["X"] = r.X;
  d["count"] = r.count;
  d["engine"] = r.engine;
  d["elapsed"] = r.elapsed;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact counts of elliptic curves with rational cyclic N-isogenies";

  m.def("factorize", [](long long n) {
    auto f = numtheory::factorize(n);
    py::list out;
    for (auto& [p, e] : f.pairs) out.append(py::make_tuple(p, e));
    return py::make_tuple(f.sign, out);
  });
  m.def("b_four", &numtheory::b_four);
  m.def("r2", &numtheory::r2);
  m.def("power_free_decompose", [](long long n, unsigned k) {
    auto [core, d] = numtheory::power_free_decompose(mpz_class(static_cast<long>(n)), k);
    return py::make_tuple(py::int_(py::str(core.get_str())), py::int_(py::str(d.get_str())));
  });
  m.def("is_dagger_minimal",
        [](const std::vector<long long>& values, const std::vector<unsigned>& powers,
           unsigned n) {
          std::vector<numtheory::i64> v(values.begin(), values.end());
          return numtheory::is_dagger_minimal(std::span<const numtheory::i64>(v),
                                              std::span<const unsigned>(powers), n);
        });
  m.def("val_p", [](long long num, long long den, unsigned long long p) {
    return numtheory::val_p(py_to_q(num, den), p);
  });

  m.def("naive_height",
        [](long long A, long long B) { return py::int_(py::str(naive_height(mk(A, B)).get_str())); });
  m.def("j_invariant", [](long long A, long long B) { return q_to_py(j_invariant(mk(A, B))); });
  m.def("minimize", [](long long A, long long B) {
    auto c = curves::minimize(mpz_class(static_cast<long>(A)), mpz_class(static_cast<long>(B)));
    return py::make_tuple(py::int_(py::str(c.A.get_str())), py::int_(py::str(c.B.get_str())));
  });
  m.def("twist", [](long long A, long long B, long long d) {
    auto c = curves::twist(mk(A, B), mpz_class(static_cast<long>(d)));
    return py::make_tuple(py::int_(py::str(c.A.get_str())), py::int_(py::str(c.B.get_str())));
  });

  m.def("has_isogeny", [](long long A, long long B, unsigned N) {
    return isogeny::has_isogeny(mk(A, B), N);
  });
  m.def("has_isogeny_routeB", [](long long A, long long B, unsigned N) {
    return isogeny::has_isogeny_routeB(mk(A, B), N);
  });
  m.def("two_isogenous_curves", [](long long A, long long B) {
    py::list out;
    for (auto& c : isogeny::two_isogenous_curves(mk(A, B)))
      out.append(py::make_tuple(py::int_(py::str(c.A.get_str())),
                                py::int_(py::str(c.B.get_str()))));
    return out;
  });

  m.def("family_curve", [](unsigned N, long long un, long long ud, long long tn, long long td) {
    auto [A, B] = families::family_curve(N, py_to_q(un, ud), py_to_q(tn, td));
    return py::make_tuple(q_to_py(A), q_to_py(B));
  });
  m.def("table2_invariants", [](unsigned N) {
    auto [r, s, mm, nn, h, w] = families::table2_invariants(N);
    return py::make_tuple(r, s, mm, nn, h, w);
  });
  m.def("jmap", [](unsigned N, long long tn, long long td) {
    return q_to_py(families::jmap(N, py_to_q(tn, td)));
  });
  m.def("registry_dump", []() {
    std::ostringstream os;
    families::dump_registry(os);
    return os.str();
  });

  m.def("census", [](unsigned N, unsigned long long X, unsigned threads) {
    return result_to_dict(counting::census(N, X, threads));
  }, py::arg("N"), py::arg("X"), py::arg("threads") = 1);
  m.def("param_count", [](unsigned N, unsigned long long X, unsigned threads) {
    return result_to_dict(counting::param_count(N, X, threads));
  }, py::arg("N"), py::arg("X"), py::arg("threads") = 1);
  m.def("count_j0_3", &counting::count_j0_3);
  m.def("stack_count_pairs", [](unsigned N, unsigned long long X) {
    return result_to_dict(counting::stack_count_pairs(N, X));
  });
  m.def("stack_count_triples", [](unsigned N, unsigned long long X) {
    return result_to_dict(counting::stack_count_triples(N, X));
  });
  m.def("count_quadric5", [](unsigned long long X) {
    return result_to_dict(counting::count_quadric5(X));
  });

  m.def("summatory_b4", &analytic::summatory_b4);
  m.def("fit_growth", [](const std::vector<std::pair<double, double>>& samples,
                         const std::vector<int>& betas) {
    auto f = analytic::fit_growth(samples, betas);
    py::dict d;
    d["alpha"] = f.alpha;
    d["beta"] = f.beta;
    d["c"] = f.c;
    d["residual"] = f.residual;
    return d;
  });

  m.def("run_command", [](const std::vector<std::string>& args) {
    return cli::run_command(args);
  });
}
