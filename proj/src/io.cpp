#include "pea/io.hpp"

#include "pea/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace pea {

namespace {

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

// One `pea ... end` block while it is being read.
struct Block {
  std::size_t first_line = 0;
  std::string name;
  std::optional<std::size_t> n;
  std::optional<Element> zero, one;
  std::map<Element, std::string> labels;
  std::map<std::pair<Element, Element>, std::pair<Element, std::size_t>> sums;  // -> (value, line)
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::vector<PeaTable> run() {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text_.size()) {
      const auto eol = text_.find('\n', pos);
      std::string_view line = text_.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
      pos = eol == std::string_view::npos ? text_.size() + 1 : eol + 1;
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      const auto words = split_words(strip_comment(line));
      if (!words.empty()) directive(line_no, words);
    }
    if (block_) throw ParseError(line_no, "missing 'end' for the algebra started on line " +
                                              std::to_string(block_->first_line));
    return std::move(out_);
  }

 private:
  static std::size_t number(std::size_t line, std::string_view word) {
    std::size_t v = 0;
    const auto [p, ec] = std::from_chars(word.data(), word.data() + word.size(), v);
    if (ec != std::errc{} || p != word.data() + word.size())
      throw ParseError(line, "expected a non-negative integer, got '" + std::string(word) + "'");
    return v;
  }

  Element index(std::size_t line, std::string_view word) const {
    const std::size_t v = number(line, word);
    if (v >= *block_->n)
      throw ParseError(line, "index " + std::to_string(v) + " out of range for " + std::to_string(*block_->n) +
                                 " elements");
    return static_cast<Element>(v);
  }

  static void arity(std::size_t line, const std::vector<std::string_view>& w, std::size_t k) {
    if (w.size() != k + 1)
      throw ParseError(line, "'" + std::string(w[0]) + "' takes " + std::to_string(k) + " argument" +
                                 (k == 1 ? "" : "s"));
  }

  Block& open(std::size_t line) {
    if (!block_) {
      block_.emplace();
      block_->first_line = line;
    }
    return *block_;
  }

  void need_size(std::size_t line, std::string_view what) const {
    if (!block_ || !block_->n) throw ParseError(line, "'" + std::string(what) + "' before 'elements'");
  }

  void directive(std::size_t line, const std::vector<std::string_view>& w) {
    const std::string_view verb = w[0];
    if (verb == "pea") {
      if (block_) throw ParseError(line, "'pea' inside an algebra; missing 'end'");
      if (w.size() > 2) throw ParseError(line, "'pea' takes at most one argument");
      open(line).name = w.size() == 2 ? std::string(w[1]) : std::string{};
    } else if (verb == "elements") {
      arity(line, w, 1);
      Block& b = open(line);
      if (b.n) throw ParseError(line, "duplicate 'elements'");
      const std::size_t n = number(line, w[1]);
      if (n == 0) throw ParseError(line, "an algebra has at least one element");
      b.n = n;
    } else if (verb == "zero" || verb == "one") {
      arity(line, w, 1);
      need_size(line, verb);
      auto& slot = verb == "zero" ? block_->zero : block_->one;
      if (slot) throw ParseError(line, "duplicate '" + std::string(verb) + "'");
      slot = index(line, w[1]);
    } else if (verb == "label") {
      arity(line, w, 2);
      need_size(line, verb);
      const Element e = index(line, w[1]);
      if (block_->labels.count(e)) throw ParseError(line, "element " + std::to_string(e) + " labelled twice");
      for (const auto& [other, l] : block_->labels)
        if (l == w[2]) throw ParseError(line, "label '" + l + "' already names element " + std::to_string(other));
      block_->labels[e] = std::string(w[2]);
    } else if (verb == "sum") {
      arity(line, w, 3);
      need_size(line, verb);
      const Element a = index(line, w[1]), b = index(line, w[2]), c = index(line, w[3]);
      const auto [it, fresh] = block_->sums.try_emplace({a, b}, c, line);
      if (!fresh && it->second.first != c)
        throw ParseError(line, "sum " + std::to_string(a) + " " + std::to_string(b) + " conflicts with line " +
                                   std::to_string(it->second.second));
    } else if (verb == "end") {
      arity(line, w, 0);
      if (!block_) throw ParseError(line, "'end' without an algebra");
      finish(line);
    } else {
      throw ParseError(line, "unknown directive '" + std::string(verb) + "'");
    }
  }

  void finish(std::size_t line) {
    Block& b = *block_;
    if (!b.n) throw ParseError(line, "missing 'elements'");
    if (!b.zero) throw ParseError(line, "missing 'zero'");
    if (!b.one) throw ParseError(line, "missing 'one'");
    if (*b.n > 1 && *b.zero == *b.one) throw ParseError(line, "zero and one coincide");

    std::vector<PeaTable::Sum> sums;
    for (const auto& [key, value] : b.sums) sums.emplace_back(key.first, key.second, value.first);
    std::vector<std::string> labels;
    if (!b.labels.empty()) {
      labels.resize(*b.n);
      for (const auto& [e, l] : b.labels) labels[static_cast<std::size_t>(e)] = l;
    }
    try {
      out_.push_back(PeaTable::from_raw(*b.n, *b.zero, *b.one, sums, labels, b.name));
    } catch (const StructuralError& err) {
      throw ParseError(line, err.what());
    }
    block_.reset();
  }

  std::string_view text_;
  std::optional<Block> block_;
  std::vector<PeaTable> out_;
};

}  // namespace

std::vector<PeaTable> parse_peas(std::string_view text) { return Parser(text).run(); }

PeaTable parse_pea(std::string_view text) {
  auto ts = parse_peas(text);
  if (ts.size() != 1)
    throw ParseError(1, "expected exactly one algebra, found " + std::to_string(ts.size()));
  return std::move(ts.front());
}

std::string emit_pea(const PeaTable& t) {
  std::ostringstream out;
  const auto n = static_cast<Element>(t.size());
  out << "pea" << (t.name().empty() ? "" : " " + t.name()) << '\n';
  out << "elements " << n << '\n' << "zero 0\n" << "one " << t.one() << '\n';
  for (Element e = 0; e < n; ++e)
    if (!t.label(e).empty()) out << "label " << e << ' ' << t.label(e) << '\n';
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      const Element c = t.sum(a, b);
      if (c == kUndefined) continue;
      if ((a == 0 && c == b) || (b == 0 && c == a)) continue;
      out << "sum " << a << ' ' << b << ' ' << c << '\n';
    }
  out << "end\n";
  return out.str();
}

std::string emit_peas(const std::vector<PeaTable>& ts) {
  std::string out;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (i > 0) out += '\n';
    out += emit_pea(ts[i]);
  }
  return out;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<PeaTable> load_peas(const std::filesystem::path& path) {
  return parse_peas(read_text(path));
}

void save_peas(const std::filesystem::path& path, const std::vector<PeaTable>& ts) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write " + path.string());
  out << emit_peas(ts);
  if (!out) throw DomainError("error writing " + path.string());
}

ElementSet parse_element_list(const PeaTable& t, std::string_view text) {
  std::string spaced(text);
  std::replace(spaced.begin(), spaced.end(), ',', ' ');
  ElementSet s(t.size());
  for (const auto word : split_words(spaced)) {
    const Element e = t.find(std::string(word));
    if (e == kUndefined) throw DomainError("unknown element '" + std::string(word) + "'");
    s.insert(e);
  }
  return s;
}

ElementSet load_element_set(const PeaTable& t, const std::filesystem::path& path) {
  std::istringstream in(read_text(path));
  std::string all, line;
  while (std::getline(in, line)) {
    all += strip_comment(line);
    all += ' ';
  }
  return parse_element_list(t, all);
}

}  // namespace pea
