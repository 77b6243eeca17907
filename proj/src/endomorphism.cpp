#include "traces/endomorphism.hpp"

#include <map>

#include "traces/errors.hpp"

namespace traces {

Endomorphism Endomorphism::make(AlphabetPtr alpha, std::vector<Trace> images) {
  if (static_cast<int>(images.size()) != alpha->size())
    throw Error("image map must be total on the letters");
  for (const Trace& t : images)
    if (!sameAlphabet(alpha, t.alphabet())) throw AlphabetMismatch();
  // The defining relations must be respected: images of independent
  // letters commute.
  for (LetterId a = 0; a < alpha->size(); ++a)
    for (LetterId b = a + 1; b < alpha->size(); ++b)
      if (alpha->independent(a, b) &&
          images[a] * images[b] != images[b] * images[a])
        throw NotWellDefined(alpha->name(a), alpha->name(b));
  return Endomorphism(std::move(alpha), std::move(images));
}

Endomorphism Endomorphism::identity(AlphabetPtr alpha) {
  std::vector<Trace> images;
  for (LetterId a = 0; a < alpha->size(); ++a)
    images.push_back(Trace::singleLetter(alpha, a));
  return Endomorphism(std::move(alpha), std::move(images));
}

Endomorphism Endomorphism::projection(AlphabetPtr alpha, LetterSet keep) {
  std::vector<Trace> images;
  for (LetterId a = 0; a < alpha->size(); ++a)
    images.push_back((keep & letterBit(a)) ? Trace::singleLetter(alpha, a)
                                           : Trace::identity(alpha));
  return Endomorphism(std::move(alpha), std::move(images));
}

Trace Endomorphism::apply(const Trace& u) const {
  if (!sameAlphabet(alpha_, u.alphabet())) throw AlphabetMismatch();
  std::vector<LetterId> word;
  for (LetterId a : u.letters()) {
    const std::vector<LetterId> img = images_[a].letters();
    word.insert(word.end(), img.begin(), img.end());
  }
  return Trace::fromWord(alpha_, std::span<const LetterId>(word));
}

Endomorphism Endomorphism::then(const Endomorphism& next) const {
  if (!sameAlphabet(alpha_, next.alpha_)) throw AlphabetMismatch();
  std::vector<Trace> images;
  for (const Trace& img : images_) images.push_back(next.apply(img));
  return Endomorphism(alpha_, std::move(images));
}

Trace Endomorphism::iterateApply(const Trace& u, std::uint64_t n,
                                 std::size_t budget) const {
  std::vector<Trace> orbit{u};
  std::map<Trace, std::size_t> seen{{u, 0}};
  while (orbit.size() <= n) {
    Trace next = apply(orbit.back());
    if (auto it = seen.find(next); it != seen.end()) {
      // Cycle s..t: u phi^n = u phi^{s + (n - s) mod (t - s)} for n >= s.
      const std::uint64_t s = it->second;
      const std::uint64_t period = orbit.size() - s;
      return orbit[s + (n - s) % period];
    }
    if (orbit.size() >= budget ||
        static_cast<std::size_t>(next.length()) > budget)
      throw OrbitGrowth(budget);
    seen.emplace(next, orbit.size());
    orbit.push_back(std::move(next));
  }
  return orbit[n];
}

std::optional<UcWitness> Endomorphism::ucWitness() const {
  const int n = alpha_->size();
  for (LetterId a = 0; a < n; ++a)
    for (LetterId b = 0; b < n; ++b) {
      if (a != b && alpha_->independent(a, b)) continue;
      const Trace& bImg = images_[b];
      if (bImg.isIdentity()) continue;
      const LetterSet firstClique = bImg.fnf().front();
      const LetterSet aContent = images_[a].content();
      for (LetterId c : setToLetters(firstClique)) {
        bool indepOfAImage = true;
        for (LetterId x : setToLetters(aContent))
          if (alpha_->dependent(c, x)) indepOfAImage = false;
        if (indepOfAImage) return UcWitness{a, b, c};
      }
    }
  return std::nullopt;
}

Endomorphism Endomorphism::restrict(LetterSet keep) const {
  AlphabetPtr sub = alpha_->induced(keep);
  std::vector<Trace> images;
  for (LetterId a : setToLetters(keep)) {
    const Trace& img = images_[a];
    if (img.content() & ~keep)
      throw NotClosed("image of '" + alpha_->name(a) +
                      "' leaves the sub-alphabet");
    images.push_back(img.project(keep));
  }
  return make(std::move(sub), std::move(images));
}

bool Endomorphism::mapsSomeLetterToIdentity() const {
  for (const Trace& t : images_)
    if (t.isIdentity()) return true;
  return false;
}

bool Endomorphism::isTrivial() const {
  for (const Trace& t : images_)
    if (!t.isIdentity()) return false;
  return true;
}

}  // namespace traces
