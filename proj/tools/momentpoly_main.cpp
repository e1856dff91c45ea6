// Command-line front end: exact coefficient dumps, estimator-comparison
// sweeps, argmax tables, and exact-rational series dumps. Data goes to the
// output file or stdout; progress notes go to stderr.

#include <momentpoly/asymptotics.hpp>
#include <momentpoly/cache.hpp>
#include <momentpoly/exact.hpp>
#include <momentpoly/symbolic.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <clocale>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <memory>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace momentpoly;
using nlohmann::json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Range {
    long lo = 0;
    long hi = 0;
};

Range parse_range(const std::string& text) {
    const auto pos = text.find("..");
    try {
        if (pos == std::string::npos) {
            long v = std::stol(text);
            return {v, v};
        }
        return {std::stol(text.substr(0, pos)), std::stol(text.substr(pos + 2))};
    } catch (const std::exception&) {
        throw UsageError("bad range '" + text + "' (expected N or LO..HI)");
    }
}

std::string fmt_g6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

std::string fmt_g10(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", x);
    return buf;
}

std::string fmt_fixed(double x, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, x);
    return buf;
}

/// 6-significant-figure rendering of a nonnegative integer: plain decimal
/// below 10^6, otherwise d.ddddde+XX with exact digit rounding.
std::string sci6(const BigInt& n) {
    std::string digits = n.get_str();
    if (digits.size() <= 6) return digits;
    int exp10 = static_cast<int>(digits.size()) - 1;
    std::string mant = digits.substr(0, 6);
    if (digits[6] >= '5') {
        int i = 5;
        for (; i >= 0; --i) {
            if (mant[i] == '9') {
                mant[i] = '0';
            } else {
                ++mant[i];
                break;
            }
        }
        if (i < 0) {
            mant = "100000";
            ++exp10;
        }
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%c.%se+%02d", mant[0], mant.substr(1).c_str(), exp10);
    return buf;
}

/// 6-significant-figure scientific form of a positive rational.
std::string sci6(const BigRat& q) {
    LogValue v = LogValue::from_bigrat(q);
    const double log10v = v.logmag / M_LN10;
    int exp10 = static_cast<int>(std::floor(log10v));
    double mant = std::pow(10.0, log10v - exp10);
    if (mant >= 9.9999995) {
        mant /= 10.0;
        ++exp10;
    }
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.5fe%+03d", mant, exp10);
    return buf;
}

/// Writes rows as CSV or a JSON array of objects.
class TableWriter {
public:
    TableWriter(std::string format, std::vector<std::string> header)
        : format_(std::move(format)), header_(std::move(header)) {}

    void add_row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }

    void emit(std::ostream& out) const {
        if (format_ == "json") {
            json arr = json::array();
            for (const auto& row : rows_) {
                json obj;
                for (size_t i = 0; i < header_.size() && i < row.size(); ++i)
                    obj[header_[i]] = row[i];
                arr.push_back(obj);
            }
            out << arr.dump(2) << '\n';
            return;
        }
        for (size_t i = 0; i < header_.size(); ++i)
            out << header_[i] << (i + 1 < header_.size() ? "," : "");
        out << '\n';
        for (const auto& row : rows_) {
            for (size_t i = 0; i < row.size(); ++i)
                out << row[i] << (i + 1 < row.size() ? "," : "");
            out << '\n';
        }
    }

private:
    std::string format_;
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

void write_output(const std::string& out_path, const std::function<void(std::ostream&)>& fn) {
    if (out_path.empty()) {
        fn(std::cout);
        return;
    }
    std::ofstream out(out_path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open output file " + out_path);
    fn(out);
    if (!out) throw std::runtime_error("short write to " + out_path);
}

struct CommonOpts {
    std::string cache_dir = "./cache";
    std::string out_path;
    std::string format = "csv";
    int jobs = 0;
};

void add_common(CLI::App* cmd, CommonOpts* opts) {
    cmd->add_option("--cache-dir", opts->cache_dir, "exact-table cache directory")
        ->envname("MOMENTPOLY_CACHE");
    cmd->add_option("--out", opts->out_path, "output file (default stdout)");
    cmd->add_option("--format", opts->format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--jobs", opts->jobs, "worker threads (0 = library default)");
}

std::unique_ptr<TableRepository> make_repository(const CommonOpts& opts) {
    auto repo = std::make_unique<TableRepository>(std::filesystem::path(opts.cache_dir));
    repo->set_progress([](int k) {
        std::cerr << "momentpoly: building exact coefficient table for k=" << k
                  << " (this can take a while)\n";
    });
    if (opts.jobs > 0) {
#ifdef _OPENMP
        omp_set_num_threads(opts.jobs);
#endif
    }
    return repo;
}

// ---------------------------------------------------------------- coeffs

int cmd_coeffs(const CommonOpts& opts, int k, const std::string& rtext, bool sci) {
    if (k < 1) throw UsageError("coeffs requires --k >= 1");
    const long n = static_cast<long>(k) * k;
    Range rr{0, n};
    if (!rtext.empty()) rr = parse_range(rtext);
    if (rr.lo < 0 || rr.hi > n || rr.lo > rr.hi)
        throw UsageError("coeffs: r range outside 0..k^2");

    auto repo = make_repository(opts);
    auto table = repo->get(k);

    TableWriter w(opts.format, {"r", "b_r", "c_r"});
    for (long r = rr.lo; r <= rr.hi; ++r) {
        const BigRat cr = table->coefficient(r);
        std::string c_text = sci ? sci6(cr) : to_string(cr);
        w.add_row({std::to_string(r), table->b_at(r).get_str(), std::move(c_text)});
    }
    write_output(opts.out_path, [&](std::ostream& os) { w.emit(os); });
    return 0;
}

// ---------------------------------------------------------------- table1

struct Table1Row {
    long r;
    std::string b_sci, col3, col4, col5, col6, col7;
};

int cmd_table1(const CommonOpts& opts, int k) {
    if (k < 2) throw UsageError("table1 requires --k >= 2");
    const long n = static_cast<long>(k) * k;
    auto repo = make_repository(opts);
    auto table = repo->get(k);
    const double exact_lc0 = log_abs(table->c0);

    std::vector<Table1Row> rows(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long r = 1; r <= n; ++r) {
        const LogValue exact_b = LogValue::from_bigint(table->b_at(r));
        const LogValue exact_c = exact_b * LogValue::from_log(exact_lc0);
        Table1Row row;
        row.r = r;
        row.b_sci = sci6(table->b_at(r));
        row.col3 = fmt_g6(ratio(exact_b, tail_low_estimate(k, r, TailForm::binomial, 0.0)));
        row.col4 = fmt_g10(ratio(exact_b, precise_expansion_estimate(k, r, 4, false, 0.0)));
        if (r < n) {
            row.col5 = fmt_g6(ratio(exact_c, saddle_estimate(k, r)));
            row.col6 = fmt_g6(ratio(exact_c, uniform_estimate(k, r)));
        } else {
            row.col5 = row.col6 = "excluded";  // formulas degenerate at r = k^2
        }
        row.col7 = fmt_g6(ratio(exact_c, tail_high_estimate(k, n - r, TailForm::binomial)));
        rows[r - 1] = std::move(row);
    }

    TableWriter w(opts.format,
                  {"r", "b_r", "binom_tail", "expansion4", "saddle", "uniform", "high_tail"});
    for (const auto& row : rows)
        w.add_row({std::to_string(row.r), row.b_sci, row.col3, row.col4, row.col5, row.col6,
                   row.col7});
    write_output(opts.out_path, [&](std::ostream& os) { w.emit(os); });
    return 0;
}

// ---------------------------------------------------------------- table2

int cmd_table2(const CommonOpts& opts, const std::string& rangetext, double rho) {
    Range kr = parse_range(rangetext);
    if (kr.lo < 2 || kr.hi > 120 || kr.lo > kr.hi)
        throw UsageError("table2: k range must lie within 2..120");

    auto repo = make_repository(opts);
    TableWriter w(opts.format, {"k", "argmax_r", "k2_minus_mu", "difference", "in_interval"});
    for (long k = kr.lo; k <= kr.hi; ++k) {
        auto table = repo->get(static_cast<int>(k));
        const auto arg = table->argmax();
        const double k2mu = static_cast<double>(k) * k - mu_location(static_cast<int>(k)).value;
        const auto [lo, hi] = predicted_max_interval(static_cast<int>(k), rho);
        bool inside = true;
        for (long r : arg) inside = inside && (r >= lo && r <= hi);
        std::string args;
        for (size_t i = 0; i < arg.size(); ++i)
            args += (i ? ";" : "") + std::to_string(arg[i]);
        w.add_row({std::to_string(k), args, fmt_fixed(k2mu, 7),
                   fmt_g6(static_cast<double>(arg.front()) - k2mu), inside ? "pass" : "fail"});
    }
    write_output(opts.out_path, [&](std::ostream& os) { w.emit(os); });
    return 0;
}

// ---------------------------------------------------------------- figure1

int cmd_figure1(const CommonOpts& opts, int k, long stride) {
    if (k < 2) throw UsageError("figure1 requires --k >= 2");
    if (stride < 1) throw UsageError("figure1 requires --stride >= 1");
    const long n = static_cast<long>(k) * k;

    auto repo = make_repository(opts);
    auto table = repo->get(k);
    const double exact_lc0 = log_abs(table->c0);

    std::vector<long> rs;
    for (long r = stride; r < n; r += stride) rs.push_back(r);

    struct Row {
        long r;
        std::string uni, sad, expn;
    };
    std::vector<Row> rows(rs.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (size_t i = 0; i < rs.size(); ++i) {
        const long r = rs[i];
        const LogValue exact_b = LogValue::from_bigint(table->b_at(r));
        const LogValue exact_c = exact_b * LogValue::from_log(exact_lc0);
        rows[i] = {r, fmt_g6(ratio(exact_c, uniform_estimate(k, r))),
                   fmt_g6(ratio(exact_c, saddle_estimate(k, r))),
                   fmt_g10(ratio(exact_b, precise_expansion_estimate(k, r, 4, false, 0.0)))};
    }

    TableWriter w(opts.format, {"r", "uniform", "saddle", "expansion4"});
    for (const auto& row : rows)
        w.add_row({std::to_string(row.r), row.uni, row.sad, row.expn});
    write_output(opts.out_path, [&](std::ostream& os) { w.emit(os); });
    return 0;
}

// ---------------------------------------------------------------- series

std::string series_as_text(const RationalSeries& s) {
    std::vector<BigRat> coeffs(s.coeffs());
    return RationalPolynomial(std::move(coeffs), "x").to_string();
}

int cmd_series(const CommonOpts& opts, const std::string& what, int order, int k) {
    std::string text;
    if (what == "g" || what == "q" || what == "qtilde") {
        if (what == "g" ? (order < 0 || order > kMaxSeriesOrder)
                        : (order < 1 || order > kMaxSeriesOrder))
            throw UsageError("series " + what + ": order outside the supported range");
        const RationalPolynomial p = what == "g"   ? g_polynomial(order)
                                     : what == "q" ? q_polynomial(order)
                                                   : q_tilde_polynomial(order);
        text = p.to_string();
    } else {
        if (k < 1) throw UsageError("series " + what + " requires --k");
        if (order < 1 || order > kMaxSeriesOrder)
            throw UsageError("series " + what + ": order outside the supported range");
        if (what == "lambda")
            text = to_string(lagrange_lambda(order, k));
        else if (what == "u")
            text = series_as_text(series_u(k, order));
        else if (what == "U")
            text = series_as_text(series_big_u(k, order));
        else if (what == "logPk")
            text = series_as_text(series_log_pk(k, order));
        else
            throw UsageError("series: unknown target '" + what + "'");
    }
    write_output(opts.out_path, [&](std::ostream& os) { os << text << '\n'; });
    return 0;
}

// ---------------------------------------------------------------- maxcoeff

int cmd_maxcoeff(const CommonOpts& opts, const std::string& rangetext, double rho) {
    Range kr = parse_range(rangetext);
    if (kr.lo < 2 || kr.lo > kr.hi) throw UsageError("maxcoeff: bad k range");

    auto repo = make_repository(opts);
    TableWriter w(opts.format,
                  {"k", "argmax_r", "peak", "k2_minus_mu", "interval_lo", "interval_hi",
                   "in_interval"});
    for (long k = kr.lo; k <= kr.hi; ++k) {
        auto table = repo->get(static_cast<int>(k));
        const auto arg = table->argmax();
        const auto peak = table->unimodality_peak();
        const double k2mu = static_cast<double>(k) * k - mu_location(static_cast<int>(k)).value;
        const auto [lo, hi] = predicted_max_interval(static_cast<int>(k), rho);
        bool inside = true;
        for (long r : arg) inside = inside && (r >= lo && r <= hi);
        std::string args;
        for (size_t i = 0; i < arg.size(); ++i)
            args += (i ? ";" : "") + std::to_string(arg[i]);
        w.add_row({std::to_string(k), args, std::to_string(peak.peak), fmt_fixed(k2mu, 7),
                   fmt_g6(lo), fmt_g6(hi), inside ? "pass" : "fail"});
    }
    write_output(opts.out_path, [&](std::ostream& os) { w.emit(os); });
    return 0;
}

// ---------------------------------------------------------------- saddle

int cmd_saddle(const CommonOpts& opts, int k, long r, int M) {
    if (k < 1) throw UsageError("saddle requires --k >= 1");
    const SaddleData s = solve_saddle(k, r);
    const LogValue plain = saddle_estimate(k, r);
    const double bracket = correction_bracket(k, r, M);
    write_output(opts.out_path, [&](std::ostream& os) {
        char buf[256];
        std::snprintf(buf, sizeof(buf),
                      "k=%d r=%ld\nu=%.12g\nU=%.12g\nf_at_u=%.12g\n"
                      "log_saddle_estimate=%.12g\ncorrection_bracket_M%d=%.12g\n"
                      "log_corrected_estimate=%.12g\n",
                      k, r, s.u, s.U, s.f_at_u, plain.logmag, M, bracket,
                      plain.logmag + std::log(bracket));
        os << buf;
    });
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    std::setlocale(LC_ALL, "C");
    CLI::App app{"exact and asymptotic coefficients of unitary moment polynomials"};
    app.require_subcommand(1);

    CommonOpts opts;
    int k = 0;
    long r = 0;
    long stride = 1;
    int order = 0;
    int bigM = 7;
    double rho = 1.0;
    std::string rtext, rangetext = "2..40", what;
    bool sci = false;

    auto* coeffs = app.add_subcommand("coeffs", "exact b_r and c_r rows");
    add_common(coeffs, &opts);
    coeffs->add_option("--k", k, "polynomial index k")->required();
    coeffs->add_option("--r", rtext, "row range LO..HI (default all)");
    coeffs->add_flag("--sci", sci, "print c_r in scientific notation");

    auto* table1 = app.add_subcommand("table1", "estimator comparison sweep for one k");
    add_common(table1, &opts);
    table1->add_option("--k", k, "polynomial index k")->required();

    auto* table2 = app.add_subcommand("table2", "exact argmax vs k^2 - mu over a k range");
    add_common(table2, &opts);
    table2->add_option("--range", rangetext, "k range LO..HI (default 2..40)");
    table2->add_option("--rho", rho, "interval width parameter (default 1)");

    auto* figure1 = app.add_subcommand("figure1", "estimator ratios sampled over r");
    add_common(figure1, &opts);
    figure1->add_option("--k", k, "polynomial index k")->required();
    figure1->add_option("--stride", stride, "sample every stride-th r (default 1)");

    auto* series = app.add_subcommand("series", "exact-rational polynomial/series dump");
    add_common(series, &opts);
    series->add_option("what", what, "g|q|qtilde|u|U|logPk|lambda")->required();
    series->add_option("order", order, "polynomial index j or truncation order J")->required();
    series->add_option("--k", k, "fixed k for the k-dependent series");

    auto* maxcoeff = app.add_subcommand("maxcoeff", "argmax, peak and predicted interval");
    add_common(maxcoeff, &opts);
    maxcoeff->add_option("--range", rangetext, "k range LO..HI")->required();
    maxcoeff->add_option("--rho", rho, "interval width parameter (default 1)");

    auto* saddle = app.add_subcommand("saddle", "saddle point data for one (k, r)");
    add_common(saddle, &opts);
    saddle->add_option("--k", k, "polynomial index k")->required();
    saddle->add_option("--r", r, "coefficient index r")->required();
    saddle->add_option("--M", bigM, "correction truncation (default 7)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "momentpoly: " << e.what() << '\n';
        return 1;
    }

    try {
        if (coeffs->parsed()) return cmd_coeffs(opts, k, rtext, sci);
        if (table1->parsed()) return cmd_table1(opts, k);
        if (table2->parsed()) return cmd_table2(opts, rangetext, rho);
        if (figure1->parsed()) return cmd_figure1(opts, k, stride);
        if (series->parsed()) return cmd_series(opts, what, order, k);
        if (maxcoeff->parsed()) return cmd_maxcoeff(opts, rangetext, rho);
        if (saddle->parsed()) return cmd_saddle(opts, k, r, bigM);
    } catch (const UsageError& e) {
        std::cerr << "momentpoly: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "momentpoly: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "momentpoly: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
