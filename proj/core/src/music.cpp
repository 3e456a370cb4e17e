#include "dihom/music.hpp"

#include <array>
#include <cctype>
#include <deque>
#include <set>
#include <stdexcept>

#include "dihom/detail/bits.hpp"

namespace dihom {

namespace {

constexpr std::array<const char*, 12> kNoteNames = {"C",  "Db", "D",  "Eb", "E",  "F",
                                                    "Gb", "G",  "Ab", "A",  "Bb", "B"};

int letter_pitch(char letter) {
  switch (letter) {
    case 'C': return 0;
    case 'D': return 2;
    case 'E': return 4;
    case 'F': return 5;
    case 'G': return 7;
    case 'A': return 9;
    case 'B': return 11;
    default: throw std::invalid_argument(std::string("unknown note letter '") + letter + "'");
  }
}

void require_d12(const DihedralElement& x) {
  if (x.n != 12) throw std::domain_error("triad names require modulus 12");
}

}  // namespace

std::string note_name(int pitch_class) {
  if (pitch_class < 0 || pitch_class >= 12)
    throw std::domain_error("pitch class out of range: " + std::to_string(pitch_class));
  return kNoteNames[static_cast<std::size_t>(pitch_class)];
}

int parse_note(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty note name");
  int pc = letter_pitch(static_cast<char>(std::toupper(static_cast<unsigned char>(text[0]))));
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (text[i] == 'b') pc -= 1;
    else if (text[i] == '#') pc += 1;
    else throw std::invalid_argument("unknown accidental in note '" + std::string(text) + "'");
  }
  return detail::mod(pc, 12);
}

ChordLabel triad_label(const DihedralElement& x) {
  require_d12(x);
  ChordLabel label;
  label.root = x.k;
  label.major = x.eps > 0;
  label.display = note_name(x.k);
  if (!label.major)
    label.display[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(label.display[0])));
  return label;
}

std::string render_triad(const DihedralElement& x) { return triad_label(x).display; }

DihedralElement parse_triad(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty chord name");
  const bool major = std::isupper(static_cast<unsigned char>(text[0])) != 0;
  return DihedralElement(12, parse_note(text), major ? +1 : -1);
}

std::string render_chord_set(const DihedralSet& s) {
  if (s.modulus() != 12) throw std::domain_error("triad names require modulus 12");
  std::string out;
  for (const DihedralElement& e : s.elements()) {
    if (!out.empty()) out += ',';
    out += render_triad(e);
  }
  return out;
}

DihedralSet parse_chord_set(std::string_view text) {
  DihedralSet out(12);
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::size_t lo = pos, hi = end;
    while (lo < hi && text[lo] == ' ') ++lo;
    while (hi > lo && text[hi - 1] == ' ') --hi;
    if (lo == hi) {
      if (pos == 0 && end == text.size()) break;
      throw std::invalid_argument("empty chord at position " + std::to_string(pos));
    }
    const DihedralElement e = parse_triad(text.substr(lo, hi - lo));
    if (out.contains(e))
      throw std::invalid_argument("duplicate chord at position " + std::to_string(lo));
    out.insert(e);
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

std::string GisLabel::to_string() const {
  return std::string(1, kind) + "_" + std::to_string(index);
}

GisLabel ti_label(const DihedralElement& g) {
  require_d12(g);
  if (g.eps > 0) return GisLabel{'T', g.k};
  return GisLabel{'I', detail::mod(g.k - 5, 12)};
}

DihedralElement ti_element(const GisLabel& label) {
  if (label.kind == 'T') return DihedralElement(12, label.index, +1);
  if (label.kind == 'I') return DihedralElement(12, label.index + 5, -1);
  throw std::invalid_argument("label kind must be 'T' or 'I'");
}

DihedralElement plr_generator(char symbol) {
  switch (symbol) {
    case 'P': return DihedralElement(12, 0, -1);
    case 'L': return DihedralElement(12, 4, -1);
    case 'R': return DihedralElement(12, 9, -1);
    default:
      throw std::invalid_argument(std::string("unknown generator '") + symbol + "'");
  }
}

std::string plr_word(const DihedralElement& g) {
  require_d12(g);
  // breadth-first search over right multiplication; expanding P, L, R in
  // order makes the first word found both shortest and lexicographically
  // minimal
  std::array<std::string, 24> word;
  std::array<bool, 24> visited{};
  std::deque<DihedralElement> queue;
  const DihedralElement start = DihedralElement::identity(12);
  visited[static_cast<std::size_t>(start.encoded())] = true;
  queue.push_back(start);
  while (!queue.empty()) {
    const DihedralElement current = queue.front();
    queue.pop_front();
    const auto current_index = static_cast<std::size_t>(current.encoded());
    if (current == g) return word[current_index];
    for (char symbol : {'P', 'L', 'R'}) {
      const DihedralElement next = mul(current, plr_generator(symbol));
      const auto next_index = static_cast<std::size_t>(next.encoded());
      if (visited[next_index]) continue;
      visited[next_index] = true;
      word[next_index] = word[current_index] + symbol;
      queue.push_back(next);
    }
  }
  throw std::logic_error("generators failed to reach the element");  // unreachable
}

DihedralElement eval_plr_word(std::string_view word) {
  DihedralElement acc = DihedralElement::identity(12);
  for (char symbol : word) acc = mul(acc, plr_generator(symbol));
  return acc;
}

LabeledPitchClassSet render_over_x(const ZnSet& x, const DihedralElement& g) {
  if (x.modulus() != g.n) throw std::domain_error("modulus mismatch between X and element");
  const int n = x.modulus();
  std::set<std::uint64_t> images;
  for (int k = 0; k < n; ++k) {
    images.insert(x.transposed(k).mask());
    images.insert(x.inverted(k).mask());
  }
  if (static_cast<int>(images.size()) != 2 * n)
    throw std::domain_error("the transposition/inversion action on X is not simply transitive");
  if (g.eps > 0)
    return LabeledPitchClassSet{x.transposed(g.k), "T_" + std::to_string(g.k) + " X"};
  return LabeledPitchClassSet{x.inverted(g.k), "I_" + std::to_string(g.k) + " X"};
}

std::string pitch_class_brackets(const ZnSet& s) {
  if (s.modulus() != 12) throw std::domain_error("note names require modulus 12");
  std::string out = "[";
  bool first = true;
  for (int r : s.residues()) {
    if (!first) out += ',';
    out += note_name(r);
    first = false;
  }
  out += ']';
  return out;
}

}  // namespace dihom
