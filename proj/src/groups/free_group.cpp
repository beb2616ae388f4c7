#include "congrowth/groups/free_group.hpp"

#include "congrowth/errors.hpp"

namespace congrowth::groups {

FreeGroup::FreeGroup(int rank) {
  if (rank < 1 || rank > 26) throw InputError("free group rank must be in [1, 26]");
  std::string letters;
  for (int i = 0; i < rank; ++i) letters.push_back(static_cast<char>('a' + i));
  alphabet_ = Alphabet::from_letters(letters, true);
  for (int i = 0; i < rank; ++i) {
    const Letter x = letter_at(static_cast<std::size_t>(i));
    generators_.push_back({alphabet_.symbol(static_cast<std::size_t>(i)), FreeWord{Word{x}}});
    generators_.push_back({alphabet_.symbol(static_cast<std::size_t>(i)) + "'", FreeWord{Word{congrowth::invert(x)}}});
  }
}

FreeWord FreeGroup::multiply(const FreeWord& x, const FreeWord& y) const {
  FreeWord out = x;
  for (Letter l : y.letters) {
    if (!out.letters.empty() && out.letters.back() == congrowth::invert(l))
      out.letters.pop_back();
    else
      out.letters.push_back(l);
  }
  return out;
}

FreeWord FreeGroup::conjugacy_key(const FreeWord& x) const {
  const Word core = cyclic_reduce(x.letters);
  if (core.empty()) return {};
  return {cyclic_normal_form(alphabet_, core).representative()};
}

}  // namespace congrowth::groups
