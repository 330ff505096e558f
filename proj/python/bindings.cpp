#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "flagmn/cli.hpp"
#include "flagmn/operators.hpp"
#include "flagmn/qschubert.hpp"

namespace py = pybind11;
using namespace flagmn;

namespace {

// (coeff, q exponents, one-line w) in canonical order
using Term = std::tuple<long long, std::vector<int>, std::string>;

std::vector<Term> terms(const Expansion& e) {
  std::vector<Term> out;
  for (const auto& [x, c] : e.terms()) out.emplace_back(c, x.q.exponents(), x.w.str());
  return out;
}

Permutation perm(const std::string& s, int n) { return parse_permutation(s, n); }

}  // namespace

PYBIND11_MODULE(_flagmn, m) {
  m.doc() = "Schubert calculus on flag manifolds";

  py::class_<Permutation>(m, "Permutation")
      .def(py::init([](const std::string& s, int n) { return parse_permutation(s, n); }), py::arg("text"), py::arg("n") = 0)
      .def_property_readonly("n", &Permutation::n)
      .def("length", &Permutation::length)
      .def("one_line", &Permutation::one_line)
      .def("inverse", &Permutation::inverse)
      .def("code", &Permutation::code)
      .def("cycles", [](const Permutation& p) { return cycle_string(p); })
      .def("__mul__", [](const Permutation& a, const Permutation& b) { return compose(a, b); })
      .def("__eq__", [](const Permutation& a, const Permutation& b) { return a == b; })
      .def("__hash__", &Permutation::hash)
      .def("__str__", &Permutation::str)
      .def("__repr__", [](const Permutation& p) { return "Permutation('" + p.str() + "')"; });

  m.def("grassmannian", [](const std::string& lam, int k, int n) { return grassmannian(parse_partition(lam), k, n); });

  m.def("monk", [](const std::string& u, int k, bool quantum, int n) {
        Expansion e;
        e.add(QElement(perm(u, n)), 1);
        return terms(quantum ? q_monk_multiply(e, k) : monk_multiply(e, k, Ambient::ring(perm(u, n).n())));
      }, py::arg("u"), py::arg("k"), py::arg("quantum") = false, py::arg("n") = 0);
  m.def("hook", [](const std::string& u, int a, int b, int k, bool quantum, int n) {
        Permutation p = perm(u, n);
        return terms(quantum ? q_hook_multiply(p, a, b, k) : hook_multiply_minimal(p, a, b, k, Ambient::ring(p.n())));
      }, py::arg("u"), py::arg("a"), py::arg("b"), py::arg("k"), py::arg("quantum") = false, py::arg("n") = 0);
  m.def("powersum", [](const std::string& u, int r, int k, bool quantum, int n) {
        Permutation p = perm(u, n);
        return terms(quantum ? q_powersum_multiply(p, r, k) : powersum_multiply(p, r, k, Ambient::ring(p.n())));
      }, py::arg("u"), py::arg("r"), py::arg("k"), py::arg("quantum") = false, py::arg("n") = 0);
  m.def("fgp_product", [](const std::string& u, const std::string& lam, int k, int n) {
        Permutation p = perm(u, n);
        return terms(fgp_product(p, parse_partition(lam), k, p.n()));
      }, py::arg("u"), py::arg("lam"), py::arg("k"), py::arg("n") = 0);
  m.def("quantum_lr", [](const std::string& u, const std::string& target, const std::string& lam, int k) {
        Permutation p = parse_permutation(u);
        QElement t = parse_qelement(target, p.n());
        return quantum_lr({p, t.w, t.q, parse_partition(lam), k});
      });

  m.def("interval", [](const std::string& u, const std::string& target, int k) {
        Permutation p = parse_permutation(u);
        auto P = q_interval(p, parse_qelement(target, p.n()), k);
        std::vector<std::string> nodes;
        for (const auto& x : P.elements) nodes.push_back(x.str());
        std::vector<std::tuple<int, int, int, bool>> edges;
        for (const auto& e : P.edges) edges.emplace_back(e.from, e.to, e.label, e.quantum);
        return std::make_pair(nodes, edges);
      });
  m.def("act", [](const std::string& word, const std::string& u, int k) -> py::object {
        auto r = act(parse_word(word), parse_permutation(u), k);
        if (!r) return py::none();
        return py::str(r->str());
      });
  m.def("is_zero_word", [](const std::string& word) { return is_zero_word(parse_word(word)); });
  m.def("classify", [](const std::string& word, int n) {
        auto wc = classify(parse_word(word), n);
        return std::make_pair(to_string(wc.kind), to_string(wc.shape));
      }, py::arg("word"), py::arg("n") = 0);

  m.def("reproduce", &cli::reproduce_text);
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return std::make_tuple(code, out.str(), err.str());
  });
}
