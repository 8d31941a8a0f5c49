#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pcc/approximation.hpp"
#include "pcc/asymptotics.hpp"
#include "pcc/capacity.hpp"
#include "pcc/channel_model.hpp"
#include "pcc/divergences.hpp"
#include "pcc/errors.hpp"
#include "pcc/experiments.hpp"
#include "pcc/monte_carlo.hpp"
#include "pcc/mutual_info.hpp"
#include "pcc/rate_bounds.hpp"
#include "pcc/validation.hpp"

namespace py = pybind11;
using namespace pcc;

namespace {

py::dict table_to_dict(const Table& t) {
    py::dict d;
    d["header"] = t.header;
    d["rows"] = t.rows;
    return d;
}

ExperimentConfig config_from_kwargs(const py::kwargs& kw) {
    ExperimentConfig cfg;
    for (const auto& [k, v] : kw) {
        std::string key = py::str(k);
        std::replace(key.begin(), key.end(), '_', '-');
        apply_setting(cfg, key, py::str(v));
    }
    return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Dead-time photon-counting OOK channel: rate bounds, capacity and simulation.";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
    py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);
    py::register_exception<EstimationError>(m, "EstimationError", PyExc_RuntimeError);

    py::class_<ChannelParams>(m, "ChannelParams")
        .def(py::init([](double A, double lambda0, double tau, double ts, int L) {
                 ChannelParams p{A, lambda0, tau, ts, L};
                 p.validate();
                 return p;
             }),
             py::arg("peak_rate"), py::arg("background_rate"), py::arg("dead_time"),
             py::arg("sampling_interval"), py::arg("samples_per_symbol"))
        .def_static("normalized", &ChannelParams::normalized, py::arg("peak_rate"),
                    py::arg("background_rate"), py::arg("dead_time"),
                    py::arg("samples_per_symbol"))
        .def_readwrite("peak_rate", &ChannelParams::peak_rate)
        .def_readwrite("background_rate", &ChannelParams::background_rate)
        .def_readwrite("dead_time", &ChannelParams::dead_time)
        .def_readwrite("sampling_interval", &ChannelParams::sampling_interval)
        .def_readwrite("samples_per_symbol", &ChannelParams::samples_per_symbol)
        .def("validate", &ChannelParams::validate);

    py::class_<BinaryDetectionProbs>(m, "BinaryDetectionProbs")
        .def(py::init<double, double>(), py::arg("p0"), py::arg("p1"))
        .def(py::init<double, double, double, double>(), py::arg("p0"), py::arg("p1"),
             py::arg("q0"), py::arg("q1"))
        .def_readonly("p_off", &BinaryDetectionProbs::p_off)
        .def_readonly("p_on", &BinaryDetectionProbs::p_on)
        .def_readonly("q_off", &BinaryDetectionProbs::q_off)
        .def_readonly("q_on", &BinaryDetectionProbs::q_on);

    m.def("detection_prob", &detection_prob, py::arg("rate"), py::arg("dead_time"));
    m.def("miss_prob", &miss_prob, py::arg("rate"), py::arg("dead_time"));
    m.def("symbol_probs", &symbol_probs, py::arg("params"));

    py::class_<BetaTriple>(m, "BetaTriple")
        .def_static("from_values", &BetaTriple::from_values)
        .def_readonly("beta", &BetaTriple::beta)
        .def_readonly("beta1", &BetaTriple::beta1)
        .def_readonly("beta2", &BetaTriple::beta2)
        .def_readonly("chernoff", &BetaTriple::chernoff)
        .def_readonly("kl_on_off", &BetaTriple::kl_on_off)
        .def_readonly("kl_off_on", &BetaTriple::kl_off_on);

    m.def("kl_binomial", py::overload_cast<double, double, int>(&kl_binomial), py::arg("p_from"),
          py::arg("p_to"), py::arg("trials"));
    m.def("chernoff_binomial", py::overload_cast<double, double, double, int>(&chernoff_binomial),
          py::arg("alpha"), py::arg("p_a"), py::arg("p_b"), py::arg("trials"));
    m.def("beta_triple", &beta_triple, py::arg("probs"), py::arg("trials"));

    m.def("binary_entropy", &binary_entropy);
    m.def("binomial_entropy", &binomial_entropy, py::arg("trials"), py::arg("p"));
    m.def("mi_binomial_mixture", &mi_binomial_mixture, py::arg("mu"), py::arg("probs"),
          py::arg("trials"));
    m.def(
        "mi_max_bruteforce",
        [](const BinaryDetectionProbs& p, int L) {
            const auto r = mi_max_bruteforce(p, L);
            return py::make_tuple(r.mu, r.i_max);
        },
        py::arg("probs"), py::arg("trials"), "Returns (mu, I_max).");
    m.def("mi_discrete_poisson", &mi_discrete_poisson, py::arg("mu"), py::arg("mean_off"),
          py::arg("mean_on"));

    m.def("lower_envelope", py::overload_cast<double, double>(&lower_envelope), py::arg("mu"),
          py::arg("beta"));
    m.def("upper_envelope", py::overload_cast<double, double, double>(&upper_envelope),
          py::arg("mu"), py::arg("beta1"), py::arg("beta2"));
    m.def("bound_gap", [](const BetaTriple& t) { return bound_gap(t); }, py::arg("triple"));
    m.def("mi_approx_low_background", &mi_approx_low_background, py::arg("mu"), py::arg("probs"),
          py::arg("trials"));
    m.def("exp_rate_large_L", &exp_rate_large_L, py::arg("p0"), py::arg("p1"));

    py::class_<CapacityResult>(m, "CapacityResult")
        .def_readonly("duty_cycle", &CapacityResult::duty_cycle)
        .def_readonly("capacity_nats", &CapacityResult::capacity_nats_per_time)
        .def_property_readonly("capacity_bits", &CapacityResult::capacity_bits_per_time);
    m.def("capacity_tau", &capacity_tau, py::arg("A"), py::arg("lambda0"), py::arg("tau"));
    m.def("capacity_sampled", &capacity_sampled, py::arg("A"), py::arg("lambda0"), py::arg("tau"),
          py::arg("sampling_interval"));
    m.def(
        "capacity_bruteforce",
        [](double A, double lam, double tau) { return capacity_bruteforce(A, lam, tau); },
        py::arg("A"), py::arg("lambda0"), py::arg("tau"));
    m.def(
        "wyner_poisson_capacity",
        [](double A, double lam) { return wyner_poisson_capacity(A, lam).capacity; },
        py::arg("A"), py::arg("lambda0"));
    m.def("asymptotic_capacity_coeff_large_A", &asymptotic_capacity_coeff_large_A,
          py::arg("lambda0"), py::arg("tau"));

    m.def(
        "simulate_counts",
        [](const ChannelParams& params, std::int64_t symbols, std::uint64_t seed, double mu,
           bool arrivals) {
            SimConfig cfg{params, symbols, seed, mu};
            const auto c = simulate(cfg, arrivals ? SimPath::Arrivals : SimPath::Bernoulli);
            py::dict d;
            d["symbols"] = py::make_tuple(c.symbols[0], c.symbols[1]);
            d["detections"] = py::make_tuple(c.detections[0], c.detections[1]);
            d["histogram"] = py::make_tuple(c.histogram[0], c.histogram[1]);
            d["plugin_mi"] = plugin_mi(c);
            return d;
        },
        py::arg("params"), py::arg("symbols"), py::arg("seed"), py::arg("mu") = 0.5,
        py::arg("arrivals") = false);

    m.def("run_mi_sweep", [](py::kwargs kw) { return table_to_dict(run_mi_sweep(config_from_kwargs(kw))); });
    m.def("run_duty_imax", [](py::kwargs kw) { return table_to_dict(run_duty_imax(config_from_kwargs(kw))); });
    m.def("run_gap", [](py::kwargs kw) { return table_to_dict(run_gap(config_from_kwargs(kw))); });
    m.def("run_capacity", [](py::kwargs kw) { return table_to_dict(run_capacity(config_from_kwargs(kw))); });
    m.def("run_simulate", [](py::kwargs kw) { return table_to_dict(run_simulate(config_from_kwargs(kw))); });
    m.def("parse_grid", &parse_grid, py::arg("spec"));

    m.def(
        "run_criterion",
        [](int id) {
            const auto r = run_criterion(id);
            return py::make_tuple(r.pass, r.measured);
        },
        py::arg("id"), "Runs one acceptance criterion; returns (passed, measured).");

    m.attr("__all__") = py::make_tuple(
        "ChannelParams", "BinaryDetectionProbs", "BetaTriple", "CapacityResult", "DomainError",
        "UsageError", "NumericalError", "EstimationError", "detection_prob", "miss_prob",
        "symbol_probs", "kl_binomial", "chernoff_binomial", "beta_triple", "binary_entropy",
        "binomial_entropy", "mi_binomial_mixture", "mi_max_bruteforce", "mi_discrete_poisson",
        "lower_envelope", "upper_envelope", "bound_gap", "mi_approx_low_background",
        "exp_rate_large_L", "capacity_tau", "capacity_sampled", "capacity_bruteforce",
        "wyner_poisson_capacity", "asymptotic_capacity_coeff_large_A", "simulate_counts",
        "run_mi_sweep", "run_duty_imax", "run_gap", "run_capacity", "run_simulate", "parse_grid",
        "run_criterion");
}
