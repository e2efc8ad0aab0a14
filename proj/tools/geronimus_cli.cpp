#include <geronimus/geronimus.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using json = nlohmann::json;
using namespace geronimus;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCheck = 2;
constexpr const char* kSchema = "geronimus/1";

std::string fmt(double v)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

class Csv {
public:
  void header(const std::vector<std::string>& names) { row_strings(names); }

  void row(const std::vector<double>& values)
  {
    std::vector<std::string> s;
    s.reserve(values.size());
    for (double v : values)
      s.push_back(fmt(v));
    row_strings(s);
  }

  std::string str() const { return out_.str(); }

private:
  void row_strings(const std::vector<std::string>& fields)
  {
    for (std::size_t i = 0; i < fields.size(); ++i)
      out_ << (i ? "," : "") << fields[i];
    out_ << '\n';
  }

  std::ostringstream out_;
};

void emit(const std::string& text, const std::string& path)
{
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f)
    throw std::runtime_error("cannot open '" + path + "' for writing");
  f << text;
  if (!f)
    throw std::runtime_error("write to '" + path + "' failed");
}

json measure_json(const MeasureSpec& spec)
{
  json m = {{"family", spec.family == Family::Laguerre ? "laguerre" : "jacobi"}, {"alpha", spec.alpha}};
  if (spec.family == Family::Jacobi)
    m["beta"] = spec.beta;
  return m;
}

std::vector<double> row_of(const Eigen::MatrixXd& m, Eigen::Index i)
{
  std::vector<double> r(m.cols());
  for (Eigen::Index k = 0; k < m.cols(); ++k)
    r[k] = m(i, k);
  return r;
}

struct TableOptions {
  int id = 1;
  bool check = false;
  std::string format = "csv";
  std::string out;
};

int cmd_table(const TableOptions& o)
{
  const auto& ref = reference_table(o.id);
  const ComputedTable t = compute_table(o.id);
  const double deviation = table_deviation(t);
  const bool pass = deviation <= ref.tolerance;

  if (o.format == "json") {
    json rows = json::array();
    for (std::size_t i = 0; i < t.N_values.size(); ++i)
      rows.push_back({{"N", t.N_values[i]}, {"zeros", row_of(t.zeros, i)}, {"z", t.charge(i)}});
    json doc = {{"schema", kSchema},
                {"table", o.id},
                {"measure", measure_json(ref.spec)},
                {"c", ref.c},
                {"n", ref.n},
                {"rows", rows},
                {"kernel_limits", std::vector<double>(t.kernel_limits.data(), t.kernel_limits.data() + t.kernel_limits.size())},
                {"minimum_mass", t.minimum_mass}};
    if (o.check)
      doc["check"] = {{"tolerance", ref.tolerance}, {"max_deviation", deviation}, {"pass", pass}};
    emit(doc.dump(2) + "\n", o.out);
  } else {
    Csv csv;
    std::vector<std::string> names = {"N"};
    for (int k = 1; k <= t.n; ++k)
      names.push_back("y" + std::to_string(k));
    names.push_back("z");
    csv.header(names);
    for (std::size_t i = 0; i < t.N_values.size(); ++i) {
      std::vector<double> r = {t.N_values[i]};
      for (double y : row_of(t.zeros, i))
        r.push_back(y);
      r.push_back(t.charge(i));
      csv.row(r);
    }
    emit(csv.str(), o.out);
  }
  if (o.check) {
    std::cerr << "table " << o.id << " check: max deviation " << fmt(deviation) << " (tolerance " << fmt(ref.tolerance)
              << ") " << (pass ? "pass" : "FAIL") << '\n';
    if (!pass)
      return kExitCheck;
  }
  return kExitOk;
}

struct SweepOptions {
  std::string measure = "laguerre";
  double alpha = 0.0;
  double beta = 0.0;
  double c = -1.0;
  int n = 3;
  std::vector<double> N;
  std::string logrange;
  std::string format = "csv";
  std::string out;
};

std::vector<double> parse_logrange(const std::string& spec)
{
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string item; std::getline(ss, item, ',');)
    parts.push_back(item);
  if (parts.size() != 3)
    throw DomainError("--N-logrange expects lo,hi,count");
  const double lo = std::stod(parts[0]), hi = std::stod(parts[1]);
  const int count = std::stoi(parts[2]);
  if (!(lo > 0.0) || !(hi > lo) || count < 2)
    throw DomainError("--N-logrange needs 0 < lo < hi and count >= 2");
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i)
    out[i] = std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * i / (count - 1));
  out.back() = hi;
  return out;
}

int cmd_sweep(const SweepOptions& o)
{
  MeasureSpec spec;
  if (o.measure == "laguerre")
    spec = MeasureSpec::laguerre(o.alpha);
  else if (o.measure == "jacobi")
    spec = MeasureSpec::jacobi(o.alpha, o.beta);
  else
    throw DomainError("--measure must be laguerre or jacobi");
  std::vector<double> masses = o.N;
  if (!o.logrange.empty()) {
    const auto extra = parse_logrange(o.logrange);
    masses.insert(masses.end(), extra.begin(), extra.end());
  }
  if (masses.empty())
    throw DomainError("no masses given: use --N or --N-logrange");
  if (o.n < 1)
    throw DomainError("--n must be >= 1");

  const GeronimusContext ctx(spec, o.c, 0.0, std::max(o.n, 2));
  const SweepTrajectory t = sweep(ctx, o.n, masses);
  const char* verdict = t.all_monotone() ? "pass" : "fail";

  if (o.format == "json") {
    json rows = json::array();
    for (std::size_t i = 0; i < masses.size(); ++i) {
      std::vector<double> scaled(o.n);
      for (int k = 0; k < o.n; ++k)
        scaled[k] = masses[i] * t.offsets(i, k);
      rows.push_back({{"N", masses[i]}, {"zeros", row_of(t.zeros, i)}, {"offsets", row_of(t.offsets, i)}, {"scaled_offsets", scaled}});
    }
    json doc = {{"schema", kSchema},
                {"measure", measure_json(spec)},
                {"c", o.c},
                {"n", o.n},
                {"limits", std::vector<double>(t.limits.limits.data(), t.limits.limits.data() + o.n)},
                {"rates", std::vector<double>(t.limits.rates.data(), t.limits.rates.data() + o.n)},
                {"rows", rows},
                {"monotone", verdict}};
    emit(doc.dump(2) + "\n", o.out);
  } else {
    Csv csv;
    std::vector<std::string> names = {"N"};
    for (int k = 1; k <= o.n; ++k)
      names.push_back("y" + std::to_string(k));
    for (int k = 1; k <= o.n; ++k)
      names.push_back("limit" + std::to_string(k));
    for (int k = 1; k <= o.n; ++k)
      names.push_back("N_offset" + std::to_string(k));
    csv.header(names);
    for (std::size_t i = 0; i < masses.size(); ++i) {
      std::vector<double> r = {masses[i]};
      for (int k = 0; k < o.n; ++k)
        r.push_back(t.zeros(i, k));
      for (int k = 0; k < o.n; ++k)
        r.push_back(t.limits.limits(k));
      for (int k = 0; k < o.n; ++k)
        r.push_back(masses[i] * t.offsets(i, k));
      csv.row(r);
    }
    emit(csv.str(), o.out);
  }
  std::cerr << "monotone: " << verdict << '\n';
  return kExitOk;
}

int cmd_verify(const std::string& suite, const std::string& out)
{
  const SuiteReport r = run_suite(suite);
  json doc = {{"schema", kSchema}, {"suite", suite}, {"cases", r.cases}, {"worst", r.worst}, {"failures", r.failures}};
  emit(doc.dump(2) + "\n", out);
  std::cerr << "verify " << suite << ": " << r.cases << " cases, " << r.failures.size() << " failures\n";
  return r.ok() ? kExitOk : kExitCheck;
}

int cmd_figure(int id, const std::string& format, const std::string& out)
{
  const FigureSpec& fig = figure_spec(id);
  const ReferenceTable& ref = reference_table(fig.table);
  const GeronimusContext base(ref.spec, ref.c, 0.0, ref.n + 1);
  std::vector<GeronimusContext> curves;
  for (double N : ref.N_values)
    curves.push_back(base.with_mass(N));

  std::vector<double> xs(fig.points);
  for (int i = 0; i < fig.points; ++i)
    xs[i] = fig.x_min + (fig.x_max - fig.x_min) * i / (fig.points - 1);

  if (format == "json") {
    json cols = json::array();
    for (std::size_t j = 0; j < curves.size(); ++j) {
      std::vector<double> v(xs.size());
      for (std::size_t i = 0; i < xs.size(); ++i)
        v[i] = eval_QcN(curves[j], ref.n, xs[i]).value;
      cols.push_back({{"N", ref.N_values[j]}, {"values", v}});
    }
    std::vector<double> p(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
      p[i] = eval_monic(base.classical(), ref.n, xs[i]).value;
    json doc = {{"schema", kSchema}, {"figure", id}, {"measure", measure_json(ref.spec)}, {"c", ref.c},
                {"n", ref.n},        {"x", xs},      {"P", p},                            {"Q", cols}};
    emit(doc.dump() + "\n", out);
    return kExitOk;
  }
  Csv csv;
  std::vector<std::string> names = {"x", "P"};
  for (double N : ref.N_values)
    names.push_back("Q_N=" + fmt(N));
  csv.header(names);
  for (double x : xs) {
    std::vector<double> r = {x, eval_monic(base.classical(), ref.n, x).value};
    for (const auto& ctx : curves)
      r.push_back(eval_QcN(ctx, ref.n, x).value);
    csv.row(r);
  }
  emit(csv.str(), out);
  return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Geronimus-perturbed Laguerre and Jacobi polynomials: zeros, limits, ladder operators"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  TableOptions table;
  auto* t = app.add_subcommand("table", "Recompute a reference zero table");
  t->add_option("id", table.id, "Table id")->required()->check(CLI::IsMember({1, 2}));
  t->add_flag("--check", table.check, "Compare against the embedded reference values (exit 2 on mismatch)");
  t->add_option("--format", table.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  t->add_option("--out", table.out, "Output file (default stdout)");

  SweepOptions sw;
  auto* s = app.add_subcommand("sweep", "Zeros of Q_n^{c,N} over a list of masses");
  s->add_option("--measure", sw.measure, "laguerre or jacobi")->check(CLI::IsMember({"laguerre", "jacobi"}));
  s->add_option("--alpha", sw.alpha, "alpha > -1");
  s->add_option("--beta", sw.beta, "beta > -1 (Jacobi)");
  s->add_option("--c", sw.c, "Shift outside the support");
  s->add_option("--n", sw.n, "Degree");
  s->add_option("--N", sw.N, "Masses, ascending")->delimiter(',');
  s->add_option("--N-logrange", sw.logrange, "lo,hi,count log-spaced masses");
  s->add_option("--format", sw.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  s->add_option("--out", sw.out, "Output file (default stdout)");

  std::string suite = "all", verify_out;
  auto* v = app.add_subcommand("verify", "Run a property suite and print a JSON report");
  v->add_option("suite", suite, "Suite name")->check(CLI::IsMember(suite_names()));
  v->add_option("--out", verify_out, "Output file (default stdout)");

  int figure_id = 1;
  std::string figure_format = "csv", figure_out;
  auto* f = app.add_subcommand("figure", "Dense samples of P_n and Q_n^{c,N} for the figure mass sets");
  f->add_option("id", figure_id, "Figure id")->required()->check(CLI::IsMember({1, 2}));
  f->add_option("--format", figure_format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  f->add_option("--out", figure_out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*t)
      return cmd_table(table);
    if (*s)
      return cmd_sweep(sw);
    if (*v)
      return cmd_verify(suite, verify_out);
    if (*f)
      return cmd_figure(figure_id, figure_format, figure_out);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
