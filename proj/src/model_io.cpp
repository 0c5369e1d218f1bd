#include <cstdio>
#include <fstream>
#include <sstream>

#include "hardylab/error.hpp"
#include "hardylab/radial_model.hpp"

namespace hardylab {

namespace {

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double parse_double(const std::string& token, int line) {
  try {
    std::size_t used = 0;
    const double v = std::stod(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorKind::parse_error, "line " + std::to_string(line) + ": bad number '" + token + "'");
  }
}

int parse_int(const std::string& token, const std::string& context) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorKind::parse_error, "bad integer '" + token + "' in '" + context + "'");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

}  // namespace

std::string write_model(const RadialModel& model) {
  std::ostringstream out;
  out << "radial-model v1\n";
  out << "label " << model.label() << "\n";
  const int R = model.depth();
  for (int r = 0; r <= R; ++r) {
    out << r << ' ' << (r < R ? fmt17(model.k_plus(r)) : std::string("-")) << ' ' << fmt17(model.k_minus(r))
        << ' ' << model.vol(r).to_string() << '\n';
  }
  out << "tail " << to_string(model.tail()) << '\n';
  return out.str();
}

RadialModel read_model(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool header = false;
  std::optional<Tail> tail;
  std::string label = "custom";
  std::vector<double> kp, km;
  std::vector<WideReal> vol;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;
    if (!header) {
      std::string version;
      fields >> version;
      if (first != "radial-model" || version != "v1")
        throw Error(ErrorKind::parse_error, "missing 'radial-model v1' header");
      header = true;
      continue;
    }
    if (tail) throw Error(ErrorKind::parse_error, "line " + std::to_string(line_no) + ": content after tail");
    if (first == "label") {
      std::getline(fields >> std::ws, label);
      continue;
    }
    if (first == "tail") {
      std::string kind;
      fields >> kind;
      if (kind == "finite") {
        tail = Tail::finite();
      } else if (kind == "unspecified") {
        tail = Tail::unspecified();
      } else if (kind == "eventually-geometric") {
        std::string k;
        if (!(fields >> k)) throw Error(ErrorKind::parse_error, "eventually-geometric tail needs kappa_inf");
        tail = Tail::geometric(parse_double(k, line_no));
      } else {
        throw Error(ErrorKind::parse_error, "line " + std::to_string(line_no) + ": unknown tail '" + kind + "'");
      }
      continue;
    }
    std::string kp_s, km_s, vol_s, extra;
    if (!(fields >> kp_s >> km_s >> vol_s) || (fields >> extra))
      throw Error(ErrorKind::parse_error, "line " + std::to_string(line_no) + ": expected 'r k_plus k_minus vol'");
    const int r = parse_int(first, line);
    if (r != static_cast<int>(vol.size()))
      throw Error(ErrorKind::parse_error, "line " + std::to_string(line_no) + ": radii must be 0, 1, 2, ...");
    if (kp_s != "-") kp.push_back(parse_double(kp_s, line_no));
    else if (kp.size() != vol.size())
      throw Error(ErrorKind::parse_error, "line " + std::to_string(line_no) + ": duplicate terminal row");
    km.push_back(parse_double(km_s, line_no));
    try {
      vol.push_back(WideReal::parse(vol_s));
    } catch (const Error&) {
      throw Error(ErrorKind::parse_error, "line " + std::to_string(line_no) + ": bad vol '" + vol_s + "'");
    }
  }
  if (!header) throw Error(ErrorKind::parse_error, "empty model file");
  if (!tail) throw Error(ErrorKind::parse_error, "missing tail line");
  if (kp.size() + 1 != vol.size())
    throw Error(ErrorKind::parse_error, "k_plus must be given for r < R and '-' at r = R");
  return make_custom(std::move(kp), std::move(km), std::move(vol), *tail, label);
}

RadialModel load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::io_error, "cannot open model file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_model(buf.str());
}

RadialModel parse_model_source(const std::string& source) {
  if (source.rfind("file:", 0) == 0) return load_model_file(source.substr(5));
  const auto parts = split(source, ':');
  if (!parts.empty() && parts[0] == "tree") {
    if (parts.size() != 3) throw Error(ErrorKind::parse_error, "expected tree:<d>:<R>, got '" + source + "'");
    return make_tree(parse_int(parts[1], source), parse_int(parts[2], source));
  }
  if (!parts.empty() && parts[0] == "antitree") {
    if (parts.size() != 4 || parts[1] != "poly")
      throw Error(ErrorKind::parse_error, "expected antitree:poly:<p>:<R>, got '" + source + "'");
    return make_antitree_poly(parse_int(parts[2], source), parse_int(parts[3], source));
  }
  return load_model_file(source);
}

}  // namespace hardylab
