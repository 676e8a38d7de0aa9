#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "genset/perm.hpp"

namespace genset {

enum class Family {
  Symmetric,
  Alternating,
  Cyclic,
  ElementaryAbelian,
  Affine,
  Sharply2Transitive,
  PaperExample2,
  PSL2,
  PGL2,
  PGammaL2,
  M11,
  WreathS5S2,
  Custom,
};

// Names one group of the catalog. `params` holds the family parameters in
// the order of the command-line grammar; `text` carries custom generators.
struct GroupSpec {
  Family family = Family::Symmetric;
  std::vector<unsigned> params;
  std::string text;

  static GroupSpec symmetric(unsigned n) { return {Family::Symmetric, {n}, {}}; }
  static GroupSpec alternating(unsigned n) { return {Family::Alternating, {n}, {}}; }
  static GroupSpec cyclic(unsigned n) { return {Family::Cyclic, {n}, {}}; }
  static GroupSpec elementary(unsigned p, unsigned k) { return {Family::ElementaryAbelian, {p, k}, {}}; }
  static GroupSpec affine(unsigned p, unsigned k, unsigned n) { return {Family::Affine, {p, k, n}, {}}; }
  static GroupSpec sharply2t(unsigned q) { return {Family::Sharply2Transitive, {q}, {}}; }
  static GroupSpec paper_ex2() { return {Family::PaperExample2, {}, {}}; }
  static GroupSpec psl2(unsigned q) { return {Family::PSL2, {q}, {}}; }
  static GroupSpec pgl2(unsigned q) { return {Family::PGL2, {q}, {}}; }
  static GroupSpec pgammal2(unsigned q) { return {Family::PGammaL2, {q}, {}}; }
  static GroupSpec m11() { return {Family::M11, {}, {}}; }
  static GroupSpec wreath_s5_s2(unsigned variant) { return {Family::WreathS5S2, {variant}, {}}; }
  static GroupSpec custom(std::string text) { return {Family::Custom, {}, std::move(text)}; }

  // Command-line form, e.g. "Sn:4" or "PSL2:7".
  std::string label() const;
};

// Parses the command-line grammar: Sn:<n>, An:<n>, Cn:<n>, ElemAb:<p>,<k>,
// Affine:<p>,<k>,<n>, Sharply2t:<q>, PaperEx2, PSL2:<q>, PGL2:<q>,
// PGammaL2:<q>, M11, WrS5S2:<1|2>, file:<path.gens>. Throws InvalidSpec.
GroupSpec parse_group_spec(std::string_view text);

// Throws InvalidSpec for out-of-range parameters; the constructed order is
// checked against the family's formula.
PermGroup build(const GroupSpec& spec);

// Generators separated by newlines, ',' or ';' between cycles; each
// generator is a product of 1-based cycles "(a,b,c)(d,e)" multiplied left
// to right. '#' starts a comment. Throws ParseError or PointOutOfRange.
std::vector<Permutation> parse_generators(std::string_view text, std::size_t degree);

// Contents of a .gens file: a "deg N" line followed by generators.
PermGroup parse_gens_file(std::string_view text);

// S5 wr S2 on 10 points: S5 on {1..5} and {6..10}, swapped by (1,6)...(5,10).
PermGroup s5_wreath_s2();

}  // namespace genset
