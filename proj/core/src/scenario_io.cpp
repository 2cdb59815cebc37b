#include "crsense/scenario_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "fmt_compat.hpp"

namespace crsense {

namespace {

constexpr int kFormatVersion = 1;

// 17 significant digits round-trip any double exactly through strtod.
std::string render(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct Reader {
  std::istream& in;
  std::string source;
  int line_no = 0;
  std::string line;

  [[noreturn]] void fail(const std::string& msg) const {
    throw std::runtime_error(strcat_(source, ":", line_no, ": ", msg));
  }

  // Next non-empty, non-comment line split into tokens.
  std::vector<std::string> next(const std::string& expect) {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty() || line[0] == '#') continue;
      std::istringstream ls(line);
      std::vector<std::string> tokens;
      std::string t;
      while (ls >> t) tokens.push_back(t);
      if (!tokens.empty()) return tokens;
    }
    ++line_no;
    fail("unexpected end of file, expected " + expect);
  }

  double number(const std::string& token, const std::string& field) {
    size_t pos = 0;
    double v = 0.0;
    try {
      v = std::stod(token, &pos);
    } catch (const std::exception&) {
      fail(strcat_(field, ": not a number: '", token, "'"));
    }
    if (pos != token.size()) fail(strcat_(field, ": trailing junk in '", token, "'"));
    return v;
  }

  long integer(const std::string& token, const std::string& field) {
    size_t pos = 0;
    long v = 0;
    try {
      v = std::stol(token, &pos);
    } catch (const std::exception&) {
      fail(strcat_(field, ": not an integer: '", token, "'"));
    }
    if (pos != token.size()) fail(strcat_(field, ": trailing junk in '", token, "'"));
    return v;
  }
};

}  // namespace

void save_scenario(const Scenario& s, std::ostream& out) {
  validate(s);
  out << "crsense-scenario\n";
  out << "version " << kFormatVersion << "\n";
  out << "t_c " << render(s.t_c) << "\n";
  out << "channels " << s.num_channels() << "\n";
  for (const Channel& c : s.channels)
    out << "channel " << c.index << " pi0 " << render(c.pi0) << " gamma "
        << render(c.gamma) << "\n";
  out << "sus " << s.num_sus() << "\n";
  for (const SuProfile& su : s.sus) {
    out << "su " << su.index << " budget " << su.budget << "\n";
    out << "pf";
    for (double v : su.pf) out << " " << render(v);
    out << "\npm";
    for (double v : su.pm) out << " " << render(v);
    out << "\n";
  }
}

void save_scenario(const Scenario& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  save_scenario(s, out);
  if (!out) throw std::runtime_error("write failed: " + path);
}

Scenario load_scenario(std::istream& in, const std::string& source) {
  Reader r{in, source};

  auto header = r.next("file header");
  if (header.size() != 1 || header[0] != "crsense-scenario")
    r.fail("not a crsense scenario file (missing 'crsense-scenario' header)");

  auto ver = r.next("version");
  if (ver.size() != 2 || ver[0] != "version") r.fail("expected 'version <int>'");
  if (r.integer(ver[1], "version") != kFormatVersion)
    r.fail(strcat_("unsupported format version ", ver[1], ", expected ", kFormatVersion));

  auto tc = r.next("t_c");
  if (tc.size() != 2 || tc[0] != "t_c") r.fail("expected 't_c <value>'");
  const double t_c = r.number(tc[1], "t_c");

  auto ch = r.next("channels");
  if (ch.size() != 2 || ch[0] != "channels") r.fail("expected 'channels <count>'");
  const long m = r.integer(ch[1], "channels");
  if (m < 1) r.fail("channels: count must be >= 1");

  std::vector<double> pi0(m), gamma(m);
  for (long k = 0; k < m; ++k) {
    auto t = r.next("channel line");
    if (t.size() != 6 || t[0] != "channel" || t[2] != "pi0" || t[4] != "gamma")
      r.fail("expected 'channel <k> pi0 <v> gamma <v>'");
    if (r.integer(t[1], "channel index") != k)
      r.fail(strcat_("channel index out of order, expected ", k));
    pi0[k] = r.number(t[3], strcat_("channel[", k, "].pi0"));
    gamma[k] = r.number(t[5], strcat_("channel[", k, "].gamma"));
  }

  auto sc = r.next("sus");
  if (sc.size() != 2 || sc[0] != "sus") r.fail("expected 'sus <count>'");
  const long n = r.integer(sc[1], "sus");
  if (n < 1) r.fail("sus: count must be >= 1");

  std::vector<SuProfile> sus(n);
  for (long i = 0; i < n; ++i) {
    auto t = r.next("su line");
    if (t.size() != 4 || t[0] != "su" || t[2] != "budget")
      r.fail("expected 'su <i> budget <l>'");
    if (r.integer(t[1], "su index") != i)
      r.fail(strcat_("su index out of order, expected ", i));
    sus[i].index = static_cast<int>(i);
    sus[i].budget = static_cast<int>(r.integer(t[3], strcat_("su[", i, "].budget")));
    for (const char* row : {"pf", "pm"}) {
      auto v = r.next(strcat_("su[", i, "].", row));
      if (v.empty() || v[0] != row || v.size() != static_cast<size_t>(m) + 1)
        r.fail(strcat_("expected '", row, "' followed by ", m, " values"));
      auto& dst = (row[1] == 'f') ? sus[i].pf : sus[i].pm;
      dst.resize(m);
      for (long k = 0; k < m; ++k)
        dst[k] = r.number(v[k + 1], strcat_("su[", i, "].", row, "[", k, "]"));
    }
  }

  try {
    return make_scenario(t_c, pi0, gamma, std::move(sus));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(strcat_(source, ": invalid scenario: ", e.what()));
  }
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  return load_scenario(in, path);
}

}  // namespace crsense
