#include "fracapprox/rational_forms.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>

#include "fracapprox/errors.hpp"

namespace fracapprox {

namespace {

// Truncated power series in t, degree < size().
using Series = std::vector<double>;

Series multiply(const Series& a, const Series& b) {
    Series out(a.size(), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0.0) continue;
        for (std::size_t j = 0; i + j < out.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

// (c + t) truncated to `len` terms
Series linear(double c, std::size_t len) {
    Series s(len, 0.0);
    s[0] = c;
    if (len > 1) s[1] = 1.0;
    return s;
}

// 1 / (c + t) = sum_j (-1)^j t^j / c^(j+1)
Series inverse_linear(double c, std::size_t len) {
    Series s(len, 0.0);
    double term = 1.0 / c;
    for (std::size_t j = 0; j < len; ++j) {
        s[j] = term;
        term *= -1.0 / c;
    }
    return s;
}

Series power(const Series& base, int k) {
    Series out(base.size(), 0.0);
    out[0] = 1.0;
    for (int i = 0; i < k; ++i) out = multiply(out, base);
    return out;
}

void check_distinct_poles(const FactoredModel& model) {
    const auto& f = model.factors;
    for (std::size_t i = 0; i < f.size(); ++i) {
        for (std::size_t j = i + 1; j < f.size(); ++j) {
            if (std::abs(f[i].pole - f[j].pole) <= 1e-12 * std::max(f[i].pole, f[j].pole)) {
                throw Error(ErrorKind::Conditioning, "repeated pole across factor pairs");
            }
        }
    }
}

}  // namespace

PartialFractionForm to_partial_fractions(const FactoredModel& model) {
    model.validate();
    if (model.s_exponent == 1) {
        throw Error(ErrorKind::Usage, "improper model (s_exponent +1) has no partial-fraction form");
    }
    check_distinct_poles(model);

    const int k = model.multiplicity;
    const auto len = static_cast<std::size_t>(k);
    const double gain = model.gain.value();
    PartialFractionForm pf;

    if (model.s_exponent == 0) {
        pf.direct = gain;
    } else {
        double c0 = gain;
        for (const auto& f : model.factors) c0 *= std::pow(f.zero / f.pole, k);
        pf.c0 = c0;
    }

    for (std::size_t i = 0; i < model.factors.size(); ++i) {
        const double p = model.factors[i].pole;
        // Taylor series of (s + p)^k H(s) about s = -p, with t = s + p.
        Series g(len, 0.0);
        g[0] = gain;
        if (model.s_exponent == -1) g = multiply(g, inverse_linear(-p, len));
        g = multiply(g, power(linear(model.factors[i].zero - p, len), k));
        for (std::size_t m = 0; m < model.factors.size(); ++m) {
            if (m == i) continue;
            const auto& f = model.factors[m];
            Series ratio = multiply(linear(f.zero - p, len), inverse_linear(f.pole - p, len));
            g = multiply(g, power(ratio, k));
        }
        PartialFractionTerm term;
        term.pole = p;
        term.residues.resize(len);
        for (int l = 1; l <= k; ++l) {
            term.residues[static_cast<std::size_t>(l - 1)] = g[static_cast<std::size_t>(k - l)];
        }
        pf.terms.push_back(std::move(term));
    }
    return pf;
}

std::complex<double> eval_partial_fractions(const PartialFractionForm& pf, double omega) {
    const std::complex<double> s(0.0, omega);
    std::complex<double> v = pf.direct;
    if (pf.c0 != 0.0) v += pf.c0 / s;
    for (const auto& term : pf.terms) {
        const auto base = 1.0 / (s + term.pole);
        auto factor = base;
        for (double r : term.residues) {
            v += r * factor;
            factor *= base;
        }
    }
    return v;
}

RcNetwork synthesize_rc(const PartialFractionForm& pf) {
    RcNetwork net;
    if (pf.direct < 0.0) throw Error(ErrorKind::NotRcRealizable, "negative direct term");
    if (pf.c0 < 0.0) throw Error(ErrorKind::NotRcRealizable, "negative 1/s coefficient");
    for (const auto& term : pf.terms) {
        if (term.residues.size() != 1) {
            throw Error(ErrorKind::NotRcRealizable, "k>1 not synthesizable");
        }
        if (!(term.residues[0] > 0.0)) {
            throw Error(ErrorKind::NotRcRealizable, "nonpositive residue at pole " + std::to_string(term.pole));
        }
    }
    if (pf.direct > 0.0) net.elements.emplace_back(SeriesResistor{pf.direct});
    if (pf.c0 > 0.0) net.elements.emplace_back(SeriesCapacitor{1.0 / pf.c0});
    for (const auto& term : pf.terms) {
        const double r = term.residues[0];
        net.elements.emplace_back(ParallelRC{r / term.pole, 1.0 / r});
    }
    return net;
}

namespace {

struct ImpedanceOf {
    std::complex<double> s;
    std::complex<double> operator()(const SeriesResistor& e) const { return e.resistance; }
    std::complex<double> operator()(const SeriesCapacitor& e) const { return 1.0 / (s * e.capacitance); }
    std::complex<double> operator()(const ParallelRC& e) const {
        return e.resistance / (1.0 + s * e.resistance * e.capacitance);
    }
};

}  // namespace

std::complex<double> impedance(const RcNetwork& net, double omega) {
    const ImpedanceOf z{{0.0, omega}};
    std::complex<double> total = 0.0;
    for (const auto& e : net.elements) total += std::visit(z, e);
    return total;
}

std::string format_spice_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9e", v);
    std::string s(buf);
    const auto e = s.find('e');
    if (e == std::string::npos) return s;  // inf / nan
    std::string mantissa = s.substr(0, e);
    std::string exponent = s.substr(e + 1);
    bool negative = false;
    if (!exponent.empty() && (exponent[0] == '+' || exponent[0] == '-')) {
        negative = exponent[0] == '-';
        exponent.erase(0, 1);
    }
    const auto nz = exponent.find_first_not_of('0');
    exponent = nz == std::string::npos ? "0" : exponent.substr(nz);
    return mantissa + "e" + (negative ? "-" : "") + exponent;
}

namespace {

std::string meta_comment(const NetlistMeta& m) {
    std::ostringstream os;
    os << "* method=" << m.method << " alpha=" << format_spice_value(m.alpha)
       << " omega_l=" << format_spice_value(m.omega_l) << " omega_h=" << format_spice_value(m.omega_h)
       << " n=" << m.n;
    return os.str();
}

std::string export_spice(const RcNetwork& net, const std::optional<NetlistMeta>& meta) {
    std::ostringstream os;
    os << "* RC driving-point impedance, Foster series chain, port nodes 1 and 0\n";
    const std::size_t count = net.elements.size();
    for (std::size_t j = 0; j < count; ++j) {
        const std::size_t idx = j + 1;
        const std::string a = std::to_string(idx);
        const std::string b = idx == count ? "0" : std::to_string(idx + 1);
        std::visit(
            [&](const auto& e) {
                using T = std::decay_t<decltype(e)>;
                if constexpr (std::is_same_v<T, SeriesResistor>) {
                    os << 'R' << idx << ' ' << a << ' ' << b << ' ' << format_spice_value(e.resistance) << '\n';
                } else if constexpr (std::is_same_v<T, SeriesCapacitor>) {
                    os << 'C' << idx << ' ' << a << ' ' << b << ' ' << format_spice_value(e.capacitance) << '\n';
                } else {
                    os << 'R' << idx << ' ' << a << ' ' << b << ' ' << format_spice_value(e.resistance) << '\n';
                    os << 'C' << idx << ' ' << a << ' ' << b << ' ' << format_spice_value(e.capacitance) << '\n';
                }
            },
            net.elements[j]);
    }
    if (meta) os << meta_comment(*meta) << '\n';
    return os.str();
}

std::string export_json(const RcNetwork& net, const std::optional<NetlistMeta>& meta) {
    using nlohmann::json;
    json elements = json::array();
    const std::size_t count = net.elements.size();
    for (std::size_t j = 0; j < count; ++j) {
        const int a = static_cast<int>(j + 1);
        const int b = j + 1 == count ? 0 : static_cast<int>(j + 2);
        json e;
        std::visit(
            [&](const auto& el) {
                using T = std::decay_t<decltype(el)>;
                if constexpr (std::is_same_v<T, SeriesResistor>) {
                    e = {{"kind", "series_resistor"}, {"R", el.resistance}, {"C", nullptr}};
                } else if constexpr (std::is_same_v<T, SeriesCapacitor>) {
                    e = {{"kind", "series_capacitor"}, {"R", nullptr}, {"C", el.capacitance}};
                } else {
                    e = {{"kind", "parallel_rc"}, {"R", el.resistance}, {"C", el.capacitance}};
                }
            },
            net.elements[j]);
        e["nodes"] = {a, b};
        elements.push_back(std::move(e));
    }
    json doc = {{"elements", std::move(elements)}};
    if (meta) {
        doc["meta"] = {{"method", meta->method},
                       {"alpha", meta->alpha},
                       {"omega_l", meta->omega_l},
                       {"omega_h", meta->omega_h},
                       {"n", meta->n}};
    } else {
        doc["meta"] = nullptr;
    }
    return doc.dump(2) + "\n";
}

}  // namespace

std::string export_netlist(const RcNetwork& net, NetlistFormat format, const std::optional<NetlistMeta>& meta) {
    return format == NetlistFormat::Spice ? export_spice(net, meta) : export_json(net, meta);
}

}  // namespace fracapprox
