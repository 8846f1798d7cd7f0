#pragma once

#include <cstdlib>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "qinfo/linalg.hpp"
#include "qinfo/states.hpp"

// QSTATE text format:
//   line 1:  "pure K" or "density K"        (K = number of qubits)
//   then:    whitespace-separated reals; re/im pairs in ket order for pure
//            (2 * 2^K values), row-major re/im pairs for density (2 * 4^K).
//   '#' starts a comment running to the end of the line.

namespace qinfo {

class QStateParseError : public std::runtime_error {
public:
  QStateParseError(int line, const std::string &message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  int line() const { return line_; }

private:
  int line_;
};

using QState = std::variant<PureState, DensityMatrix>;

inline int qstate_num_qubits(const QState &s) {
  return std::visit([](const auto &v) { return v.num_qubits(); }, s);
}

inline DensityMatrix qstate_density(const QState &s) {
  if (std::holds_alternative<PureState>(s))
    return pure_to_density(std::get<PureState>(s));
  return std::get<DensityMatrix>(s);
}

namespace detail {

struct Token {
  std::string text;
  int line;
};

inline std::vector<Token> tokenize_qstate(std::istream &in) {
  std::vector<Token> tokens;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (const auto hash = raw.find('#'); hash != std::string::npos)
      raw.erase(hash);
    std::istringstream ls(raw);
    std::string tok;
    while (ls >> tok)
      tokens.push_back({tok, line});
  }
  return tokens;
}

inline double parse_real(const Token &t) {
  const char *begin = t.text.c_str();
  char *end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end != begin + t.text.size())
    throw QStateParseError(t.line, "invalid number '" + t.text + "'");
  if (!std::isfinite(v))
    throw QStateParseError(t.line, "non-finite value '" + t.text + "'");
  return v;
}

} // namespace detail

inline QState parse_qstate(std::istream &in) {
  const auto tokens = detail::tokenize_qstate(in);
  if (tokens.empty())
    throw QStateParseError(1, "empty input, expected 'pure K' or 'density K'");
  const std::string &kind = tokens[0].text;
  if (kind != "pure" && kind != "density")
    throw QStateParseError(tokens[0].line,
                           "expected 'pure' or 'density', got '" + kind + "'");
  if (tokens.size() < 2 || tokens[1].line != tokens[0].line)
    throw QStateParseError(tokens[0].line, "missing qubit count after '" + kind + "'");

  int k = 0;
  try {
    std::size_t pos = 0;
    k = std::stoi(tokens[1].text, &pos);
    if (pos != tokens[1].text.size())
      throw std::invalid_argument("");
  } catch (const std::exception &) {
    throw QStateParseError(tokens[1].line,
                           "invalid qubit count '" + tokens[1].text + "'");
  }
  if (k < 1 || k > kMaxQubits)
    throw QStateParseError(tokens[1].line, "qubit count must be in [1, " +
                                               std::to_string(kMaxQubits) + "]");

  const std::size_t dim = std::size_t{1} << k;
  const std::size_t expected =
      (kind == "pure") ? 2 * dim : 2 * dim * dim; // re/im pairs
  const std::size_t have = tokens.size() - 2;
  if (have < expected)
    throw QStateParseError(tokens.back().line,
                           "expected " + std::to_string(expected) + " values, got " +
                               std::to_string(have));
  if (have > expected)
    throw QStateParseError(tokens[2 + expected].line,
                           "unexpected extra value '" + tokens[2 + expected].text + "'");

  std::vector<cplx> entries(expected / 2);
  for (std::size_t i = 0; i < entries.size(); ++i)
    entries[i] = cplx(detail::parse_real(tokens[2 + 2 * i]),
                      detail::parse_real(tokens[2 + 2 * i + 1]));
  const int last_line = tokens.back().line;

  try {
    if (kind == "pure")
      return PureState(k, Vector::from_entries(std::move(entries)));
    return DensityMatrix::from_matrix(k,
                                      Matrix::from_entries(dim, dim, std::move(entries)));
  } catch (const std::invalid_argument &e) {
    throw QStateParseError(last_line, e.what());
  }
}

inline QState parse_qstate(const std::string &text) {
  std::istringstream in(text);
  return parse_qstate(in);
}

inline QState load_qstate(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open state file '" + path + "'");
  return parse_qstate(in);
}

//------------------------------------------------------------------------------
// Writers (round-trip convenience)
//------------------------------------------------------------------------------

inline std::string qstate_text(const PureState &s) {
  std::ostringstream os;
  os.precision(17);
  os << "pure " << s.num_qubits() << "\n";
  for (std::size_t i = 0; i < s.ket().dim(); ++i)
    os << s.ket()[i].real() << " " << s.ket()[i].imag() << "\n";
  return os.str();
}

inline std::string qstate_text(const DensityMatrix &rho) {
  std::ostringstream os;
  os.precision(17);
  os << "density " << rho.num_qubits() << "\n";
  for (std::size_t i = 0; i < rho.dim(); ++i) {
    for (std::size_t j = 0; j < rho.dim(); ++j)
      os << (j ? " " : "") << rho.mat()(i, j).real() << " " << rho.mat()(i, j).imag();
    os << "\n";
  }
  return os.str();
}

} // namespace qinfo
