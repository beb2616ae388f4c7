#include "congrowth/diagram/morphism.hpp"

#include "congrowth/errors.hpp"

namespace congrowth::diagram {

void DiagramMorphism::validate() const {
  if (!source || !target) throw InputError("morphism needs source and target presentations");
  if (letter_images.size() != source->alphabet().size()) throw InputError("morphism must map every letter");
  if (cell_images.size() != source->size()) throw InputError("morphism must map every cell");
  for (const auto& w : letter_images) {
    if (w.empty()) throw InputError("letter images must be nonempty");
    target->alphabet().validate(w);
  }
  for (std::size_t i = 0; i < cell_images.size(); ++i) {
    const auto& img = cell_images[i];
    const auto& c = source->cell(i);
    if (img.presentation() != target && (!img.presentation() || *img.presentation() != *target))
      throw InputError("image of cell " + source->format_cell(i) + " is over another presentation");
    if (img.top() != map_word(c.top) || img.bottom() != map_word(c.bottom))
      throw InputError("image of cell " + source->format_cell(i) + " has the wrong boundary");
  }
}

Word DiagramMorphism::map_word(const Word& w) const {
  Word out;
  for (Letter x : w) {
    const auto& img = letter_images.at(letter_index(x));
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

DiagramMorphism identity_morphism(const PresentationPtr& p) {
  DiagramMorphism m{p, p, {}, {}};
  for (std::size_t i = 0; i < p->alphabet().size(); ++i) m.letter_images.push_back({letter_at(i)});
  for (std::size_t i = 0; i < p->size(); ++i) m.cell_images.push_back(Diagram::cell(p, i));
  return m;
}

Diagram apply_morphism(const DiagramMorphism& psi, const Diagram& d) {
  psi.validate();
  if (d.presentation() != psi.source && *d.presentation() != *psi.source)
    throw InputError("diagram is not over the morphism's source presentation");
  const auto& p = *psi.source;
  Word current = d.top();
  std::vector<Step> steps;
  for (const auto& s : d.steps()) {
    std::uint32_t shift = 0;
    for (std::uint32_t i = 0; i < s.offset; ++i)
      shift += static_cast<std::uint32_t>(psi.letter_images[letter_index(current[i])].size());
    const auto& image = s.dir == Direction::forward ? psi.cell_images[s.cell] : inverse(psi.cell_images[s.cell]);
    for (auto t : image.steps()) {
      t.offset += shift;
      steps.push_back(t);
    }
    const auto& c = p.cell(s.cell);
    const Word& from = s.dir == Direction::forward ? c.top : c.bottom;
    const Word& to = s.dir == Direction::forward ? c.bottom : c.top;
    current.erase(current.begin() + s.offset, current.begin() + s.offset + static_cast<std::ptrdiff_t>(from.size()));
    current.insert(current.begin() + s.offset, to.begin(), to.end());
  }
  return Diagram::from_derivation(psi.target, psi.map_word(d.top()), steps);
}

}  // namespace congrowth::diagram
