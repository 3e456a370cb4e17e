#pragma once

#include <string>
#include <string_view>

#include "dihom/dihedral.hpp"

namespace dihom {

/// Note names with flats for the black keys: C Db D Eb E F Gb G Ab A Bb B.
/// Parsing also accepts sharps ("C#" == "Db").
std::string note_name(int pitch_class);
int parse_note(std::string_view text);

struct ChordLabel {
  int root = 0;
  bool major = true;
  std::string display;  // upper case = major ("Eb"), lower case = minor ("eb")
};

/// Triad dictionary for D_12: (s,+1) is the major triad on root s and (s,-1)
/// the minor triad on root s.
ChordLabel triad_label(const DihedralElement& x);
std::string render_triad(const DihedralElement& x);
DihedralElement parse_triad(std::string_view text);

/// "c,Db,Eb,e,Ab" <-> set of triads in D_12 (case encodes quality).
std::string render_chord_set(const DihedralSet& s);
DihedralSet parse_chord_set(std::string_view text);

/// Transposition/inversion name of a left-acting element of D_12:
/// (p,+1) <-> T_p and (p,-1) <-> I_{p-5} (mod 12).
struct GisLabel {
  char kind = 'T';  // 'T' or 'I'
  int index = 0;

  std::string to_string() const;  // "T_7", "I_2"
  friend bool operator==(const GisLabel&, const GisLabel&) = default;
};
GisLabel ti_label(const DihedralElement& g);
DihedralElement ti_element(const GisLabel& label);

/// Right-action generator dictionary: P -> (0,-1), L -> (4,-1), R -> (9,-1).
DihedralElement plr_generator(char symbol);

/// Shortest word over {P,L,R} whose generator product equals g, ties broken
/// lexicographically with P < L < R. The identity gets the empty word.
std::string plr_word(const DihedralElement& g);
DihedralElement eval_plr_word(std::string_view word);

struct LabeledPitchClassSet {
  ZnSet pcs;
  std::string label;  // "T_4 X", "I_9 X"
};

/// Interpretation of D_n over the transposition/inversion orbit of a
/// pitch-class set X: (k,+1) -> T_k X, (k,-1) -> I_k X. Requires the action
/// on the orbit of X to be simply transitive (all 2n images distinct).
LabeledPitchClassSet render_over_x(const ZnSet& x, const DihedralElement& g);

/// "[C,Db,F]" bracket rendering of a pitch-class set.
std::string pitch_class_brackets(const ZnSet& s);

}  // namespace dihom
