#include "osa/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>

namespace osa {

std::string format_name(InputFormat f) {
  switch (f) {
    case InputFormat::Circuits: return "circuits";
    case InputFormat::Matrix: return "matrix";
    case InputFormat::Graph: return "graph";
  }
  return "?";
}

InputFormat parse_format(const std::string& name) {
  if (name == "circuits") return InputFormat::Circuits;
  if (name == "matrix") return InputFormat::Matrix;
  if (name == "graph") return InputFormat::Graph;
  throw InputError("unknown input format '" + name + "' (expected circuits, matrix or graph)");
}

std::optional<InputFormat> format_from_extension(const std::string& path) {
  const auto dot = path.rfind('.');
  if (dot == std::string::npos) return std::nullopt;
  const std::string ext = path.substr(dot + 1);
  if (ext == "circuits") return InputFormat::Circuits;
  if (ext == "matrix") return InputFormat::Matrix;
  if (ext == "graph") return InputFormat::Graph;
  return std::nullopt;
}

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

struct Lines {
  std::vector<Line> body;
  std::optional<std::vector<std::string>> labels;
  int labels_line = 0;
};

Lines read_lines(std::istream& in) {
  Lines out;
  std::string text;
  int number = 0;
  while (std::getline(in, text)) {
    ++number;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (const auto hash = text.find('#'); hash != std::string::npos) text.erase(hash);
    std::istringstream ss(text);
    std::vector<std::string> tokens;
    for (std::string tok; ss >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (tokens[0].rfind("labels:", 0) == 0) {
      if (out.labels) throw ParseError("duplicate labels line", number);
      std::vector<std::string> labels;
      if (tokens[0].size() > 7) labels.push_back(tokens[0].substr(7));
      labels.insert(labels.end(), tokens.begin() + 1, tokens.end());
      out.labels = std::move(labels);
      out.labels_line = number;
      continue;
    }
    out.body.push_back({number, std::move(tokens)});
  }
  return out;
}

long parse_int(const std::string& tok, int line) {
  if (tok.empty() || tok.find_first_not_of("+-0123456789") != std::string::npos)
    throw ParseError("expected an integer, got '" + tok + "'", line);
  try {
    std::size_t used = 0;
    const long v = std::stol(tok, &used);
    if (used != tok.size()) throw ParseError("expected an integer, got '" + tok + "'", line);
    return v;
  } catch (const std::logic_error&) {
    throw ParseError("expected an integer, got '" + tok + "'", line);
  }
}

mpq_class parse_rational(const std::string& tok, int line) {
  const auto slash = tok.find('/');
  const std::string num = tok.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : tok.substr(slash + 1);
  auto valid = [](const std::string& s) {
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    return s.size() > start && s.find_first_not_of("0123456789", start) == std::string::npos;
  };
  if (!valid(num) || !valid(den) || den[0] == '-' || den[0] == '+')
    throw ParseError("expected an integer or fraction p/q, got '" + tok + "'", line);
  mpz_class p(num[0] == '+' ? num.substr(1) : num, 10);
  mpz_class q(den, 10);
  if (q == 0) throw ParseError("zero denominator in '" + tok + "'", line);
  mpq_class r(p, q);
  r.canonicalize();
  return r;
}

void check_size(long n, int max_n, int line) {
  if (n < 0) throw ParseError("negative size", line);
  if (n > max_n)
    throw InputError("ground set of size " + std::to_string(n) + " exceeds the limit " + std::to_string(max_n) +
                     " (set OSA_MAX_N to raise it)");
}

void expect_tokens(const Line& line, std::size_t count, const char* what) {
  if (line.tokens.size() != count)
    throw ParseError(std::string("expected ") + what + " (" + std::to_string(count) + " fields), got " +
                         std::to_string(line.tokens.size()) + " fields",
                     line.number);
}

}  // namespace

ParsedInput parse_input(std::istream& in, InputFormat format, int max_n) {
  const Lines lines = read_lines(in);
  if (lines.body.empty()) throw ParseError("missing header", 1);
  const Line& header = lines.body.front();
  ParsedInput out;
  out.format = format;

  switch (format) {
    case InputFormat::Circuits: {
      if (header.tokens.size() != 2 || header.tokens[0] != "n")
        throw ParseError("expected header 'n <N>'", header.number);
      const long n = parse_int(header.tokens[1], header.number);
      check_size(n, max_n, header.number);
      std::vector<Subset> circuits;
      for (std::size_t k = 1; k < lines.body.size(); ++k) {
        const Line& line = lines.body[k];
        Subset c = 0;
        for (const auto& tok : line.tokens) {
          const long i = parse_int(tok, line.number);
          if (i < 1 || i > n) throw ParseError("element " + tok + " outside 1.." + std::to_string(n), line.number);
          if (contains(c, static_cast<int>(i - 1))) throw ParseError("element " + tok + " repeated", line.number);
          c |= singleton(static_cast<int>(i - 1));
        }
        if (std::find(circuits.begin(), circuits.end(), c) != circuits.end())
          throw ParseError("circuit listed twice", line.number);
        circuits.push_back(c);
      }
      out.matroid = Matroid::from_circuits(static_cast<int>(n), circuits);
      break;
    }
    case InputFormat::Matrix: {
      expect_tokens(header, 2, "header '<n> <d>'");
      const long n = parse_int(header.tokens[0], header.number);
      const long d = parse_int(header.tokens[1], header.number);
      check_size(n, max_n, header.number);
      if (d < 1) throw ParseError("dimension must be at least 1", header.number);
      if (static_cast<long>(lines.body.size()) - 1 != n)
        throw ParseError("expected " + std::to_string(n) + " rows, found " + std::to_string(lines.body.size() - 1),
                         lines.body.back().number);
      Arrangement arr;
      for (long i = 1; i <= n; ++i) {
        const Line& line = lines.body[i];
        expect_tokens(line, static_cast<std::size_t>(d), "a matrix row");
        std::vector<mpq_class> row;
        for (const auto& tok : line.tokens) row.push_back(parse_rational(tok, line.number));
        arr.normals.push_back(std::move(row));
      }
      out.matroid = Matroid::from_matrix(arr);
      out.arrangement = std::move(arr);
      break;
    }
    case InputFormat::Graph: {
      expect_tokens(header, 2, "header '<V> <E>'");
      const long v = parse_int(header.tokens[0], header.number);
      const long e = parse_int(header.tokens[1], header.number);
      if (v < 0) throw ParseError("negative vertex count", header.number);
      check_size(e, max_n, header.number);
      if (static_cast<long>(lines.body.size()) - 1 != e)
        throw ParseError("expected " + std::to_string(e) + " edges, found " + std::to_string(lines.body.size() - 1),
                         lines.body.back().number);
      for (long i = 1; i <= e; ++i) {
        const Line& line = lines.body[i];
        expect_tokens(line, 2, "an edge 'u v'");
        const long a = parse_int(line.tokens[0], line.number);
        const long b = parse_int(line.tokens[1], line.number);
        if (a < 1 || a > v || b < 1 || b > v)
          throw ParseError("vertex outside 1.." + std::to_string(v), line.number);
        out.edges.emplace_back(static_cast<int>(a - 1), static_cast<int>(b - 1));
      }
      out.vertices = static_cast<int>(v);
      out.matroid = Matroid::from_graph(out.vertices, out.edges);
      break;
    }
  }

  if (lines.labels) {
    try {
      out.matroid = out.matroid.with_labels(*lines.labels);
    } catch (const InputError& err) {
      throw ParseError(err.what(), lines.labels_line);
    }
  }
  return out;
}

ParsedInput parse_input_file(const std::string& path, InputFormat format, int max_n) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return parse_input(in, format, max_n);
}

VariableOrder parse_order(const Matroid& m, const std::string& text) {
  std::string cleaned = text;
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::replace(cleaned.begin(), cleaned.end(), '<', ' ');
  std::map<std::string, int> index;
  for (int i = 0; i < m.size(); ++i) index[m.labels()[i]] = i;
  std::istringstream ss(cleaned);
  std::vector<int> seq;
  for (std::string tok; ss >> tok;) {
    auto it = index.find(tok);
    if (it == index.end()) throw InputError("unknown element '" + tok + "' in order");
    seq.push_back(it->second);
  }
  if (static_cast<int>(seq.size()) != m.size())
    throw InputError("order lists " + std::to_string(seq.size()) + " elements, the ground set has " +
                     std::to_string(m.size()));
  try {
    return VariableOrder::from_sequence(std::move(seq));
  } catch (const PreconditionError&) {
    throw InputError("order repeats an element");
  }
}

}  // namespace osa
