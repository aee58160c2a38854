#ifndef ROTAMAP_GROUP_HPP_
#define ROTAMAP_GROUP_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "coset_table.hpp"
#include "error.hpp"
#include "presentation.hpp"
#include "word.hpp"

namespace rotamap {

  // A group element, identified by its coset in the regular representation.
  struct ElementIndex {
    std::uint32_t value = 0;

    friend constexpr bool operator==(ElementIndex, ElementIndex) = default;
    friend constexpr auto operator<=>(ElementIndex, ElementIndex) = default;
  };

  inline constexpr ElementIndex identity_element{0};

  // Permutation of the group elements induced by right multiplication.
  using Permutation = std::vector<std::uint32_t>;

  // A subgroup, materialised as a sorted element list plus a membership
  // bitmap over the ambient group.
  class SubgroupHandle {
   public:
    SubgroupHandle() = default;
    SubgroupHandle(std::vector<bool> member, std::vector<Word> generator_words)
        : _member(std::move(member)), _gens(std::move(generator_words)) {
      for (std::size_t i = 0; i < _member.size(); ++i) {
        if (_member[i]) {
          _elements.push_back(ElementIndex{static_cast<std::uint32_t>(i)});
        }
      }
    }

    std::size_t size() const noexcept {
      return _elements.size();
    }
    bool contains(ElementIndex x) const {
      return x.value < _member.size() && _member[x.value];
    }
    std::vector<ElementIndex> const& elements() const noexcept {
      return _elements;
    }
    std::vector<Word> const& generator_words() const noexcept {
      return _gens;
    }
    std::vector<bool> const& membership() const noexcept {
      return _member;
    }

    friend bool operator==(SubgroupHandle const& a, SubgroupHandle const& b) {
      return a._member == b._member;
    }

   private:
    std::vector<bool>         _member;
    std::vector<ElementIndex> _elements;
    std::vector<Word>         _gens;
  };

  // Elements common to both subgroups (as a plain element list).
  inline std::vector<ElementIndex> intersection(SubgroupHandle const& a,
                                                SubgroupHandle const& b) {
    std::vector<ElementIndex> out;
    for (auto x : a.elements()) {
      if (b.contains(x)) {
        out.push_back(x);
      }
    }
    return out;
  }

  // A finite group given by a presentation together with its complete coset
  // table over the trivial subgroup (the right regular representation) and a
  // Schreier representative word for every element.
  class GroupRep {
   public:
    GroupRep(Presentation p, CosetTable table)
        : _p(std::move(p)), _table(std::move(table)) {
      build_schreier();
    }

    Presentation const& presentation() const noexcept {
      return _p;
    }
    CosetTable const& table() const noexcept {
      return _table;
    }
    std::size_t order() const noexcept {
      return _table.num_rows();
    }
    std::size_t num_generators() const noexcept {
      return _p.num_generators();
    }

    // Right action of `w` on x.
    ElementIndex multiply(ElementIndex x, Word const& w) const {
      std::uint32_t c = x.value;
      for (auto l : w) {
        c = _table.get(c, l.column());
      }
      return ElementIndex{c};
    }

    ElementIndex multiply(ElementIndex x, ElementIndex y) const {
      return multiply(x, _schreier[y.value]);
    }

    ElementIndex element_of(Word const& w) const {
      return multiply(identity_element, w);
    }

    Word const& element_word(ElementIndex x) const {
      return _schreier.at(x.value);
    }

    ElementIndex inverse(ElementIndex x) const {
      return element_of(invert(_schreier[x.value]));
    }

    // Least k >= 1 with x^k = identity.
    std::size_t element_order(ElementIndex x) const {
      auto const&  w = _schreier[x.value];
      ElementIndex y = x;
      std::size_t  k = 1;
      while (y != identity_element) {
        y = multiply(y, w);
        ++k;
      }
      return k;
    }

    std::size_t element_order(Word const& w) const {
      return element_order(element_of(w));
    }

    // The permutation x -> x*w of all elements.
    Permutation permutation(Word const& w) const {
      Permutation perm(order());
      for (std::uint32_t c = 0; c < perm.size(); ++c) {
        perm[c] = multiply(ElementIndex{c}, w).value;
      }
      return perm;
    }

    bool equal(Word const& u, Word const& v) const {
      return element_of(u) == element_of(v);
    }

   private:
    void build_schreier() {
      auto n = _table.num_rows();
      _schreier.assign(n, Word{});
      std::vector<bool> seen(n, false);
      std::vector<std::uint32_t> queue{0};
      seen[0] = true;
      for (std::size_t i = 0; i < queue.size(); ++i) {
        auto c = queue[i];
        for (std::uint32_t col = 0; col < _table.num_columns(); ++col) {
          auto d = _table.get(c, col);
          if (!seen[d]) {
            seen[d]      = true;
            _schreier[d] = _schreier[c] * Word{Letter::from_column(col)};
            queue.push_back(d);
          }
        }
      }
    }

    Presentation      _p;
    CosetTable        _table;
    std::vector<Word> _schreier;
  };

  using GroupPtr = std::shared_ptr<GroupRep const>;

  // Enumerate the group presented by `p`. Throws CapExceeded when more than
  // `cap` cosets would be live at once.
  inline GroupPtr enumerate(Presentation const& p,
                            std::size_t         cap = default_coset_cap) {
    auto table = enumerate_cosets(p, cap);
    return std::make_shared<GroupRep const>(p, std::move(table));
  }

  // Subgroup generated by `gens`: breadth-first closure of the identity under
  // right multiplication by the generators and their inverses.
  inline SubgroupHandle subgroup_closure(GroupRep const&         g,
                                         std::span<Word const>   gens) {
    std::vector<Permutation> perms;
    for (auto const& w : gens) {
      perms.push_back(g.permutation(w));
      perms.push_back(g.permutation(invert(w)));
    }
    std::vector<bool>          member(g.order(), false);
    std::vector<std::uint32_t> queue{0};
    member[0] = true;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (auto const& perm : perms) {
        auto d = perm[queue[i]];
        if (!member[d]) {
          member[d] = true;
          queue.push_back(d);
        }
      }
    }
    return SubgroupHandle(std::move(member),
                          std::vector<Word>(gens.begin(), gens.end()));
  }

  inline SubgroupHandle subgroup_closure(GroupRep const&                g,
                                         std::initializer_list<Word> gens) {
    return subgroup_closure(g, std::span<Word const>(gens.begin(), gens.size()));
  }

  namespace detail {

    // Incrementally grown subgroup: adding an element that is already present
    // is free, otherwise the closure is extended from the current members.
    class GrowingSubgroup {
     public:
      explicit GrowingSubgroup(GroupRep const& g)
          : _g(g), _member(g.order(), false), _queue{0} {
        _member[0] = true;
      }

      bool contains(ElementIndex x) const {
        return _member[x.value];
      }

      // Returns true if x was new.
      bool add(ElementIndex x) {
        if (_member[x.value]) {
          return false;
        }
        _gens.push_back(_g.element_word(x));
        _perms.push_back(_g.permutation(_gens.back()));
        // The new generator acts on every old member, so re-close from the
        // start of the queue.
        for (std::size_t i = 0; i < _queue.size(); ++i) {
          for (auto const& perm : _perms) {
            auto d = perm[_queue[i]];
            if (!_member[d]) {
              _member[d] = true;
              _queue.push_back(d);
            }
          }
        }
        return true;
      }

      std::size_t size() const {
        return _queue.size();
      }

      SubgroupHandle handle() && {
        return SubgroupHandle(std::move(_member), std::move(_gens));
      }

     private:
      GroupRep const&            _g;
      std::vector<bool>          _member;
      std::vector<std::uint32_t> _queue;
      std::vector<Word>          _gens;
      std::vector<Permutation>   _perms;
    };

  }  // namespace detail

  // Normal closure of the elements named by `words`, conjugating by
  // `conjugators` (the group generators when empty). When the conjugators
  // generate a subgroup K, the result is the normal closure in K.
  inline SubgroupHandle normal_closure(GroupRep const&       g,
                                       std::span<Word const> words,
                                       std::span<Word const> conjugators = {}) {
    std::vector<Word> conj(conjugators.begin(), conjugators.end());
    if (conj.empty()) {
      for (std::uint32_t i = 0; i < g.num_generators(); ++i) {
        conj.push_back(Word::generator(i));
      }
    }
    detail::GrowingSubgroup   n(g);
    std::vector<ElementIndex> todo;
    for (auto const& w : words) {
      auto x = g.element_of(w);
      if (n.add(x)) {
        todo.push_back(x);
      }
    }
    // Conjugate every generator of N by every conjugator (and inverse).
    for (std::size_t i = 0; i < todo.size(); ++i) {
      auto const& hw = g.element_word(todo[i]);
      for (auto const& c : conj) {
        for (auto const& cw : {c, invert(c)}) {
          auto y = g.element_of(invert(cw) * hw * cw);
          if (n.add(y)) {
            todo.push_back(y);
          }
        }
      }
    }
    return std::move(n).handle();
  }

  inline SubgroupHandle normal_closure(GroupRep const& g, Word const& w) {
    return normal_closure(g, std::span<Word const>(&w, 1));
  }

  // True iff the map generator_i -> images[i] extends to an automorphism:
  // every relator maps to the identity and the images generate the group.
  inline bool extends_to_automorphism(GroupRep const&       g,
                                      std::span<Word const> images) {
    if (images.size() != g.num_generators()) {
      throw PreconditionError("extends_to_automorphism: expected "
                              + std::to_string(g.num_generators())
                              + " images, got " + std::to_string(images.size()));
    }
    for (auto const& r : g.presentation().relators()) {
      if (g.element_of(substitute(r, images)) != identity_element) {
        return false;
      }
    }
    return subgroup_closure(g, images).size() == g.order();
  }

  // Cayley-graph test: does gens[i] -> images[i] extend to an isomorphism
  // from H = <gens> onto H? Walks H breadth-first, defining the map along a
  // spanning tree and checking every remaining edge. Works for any generated
  // subgroup, without a presentation of it.
  inline bool extends_to_subgroup_automorphism(GroupRep const&       g,
                                               std::span<Word const> gens,
                                               std::span<Word const> images) {
    if (gens.size() != images.size()) {
      throw PreconditionError("generator and image lists differ in length");
    }
    auto                     h = subgroup_closure(g, gens);
    std::vector<Permutation> gp, ip;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (!h.contains(g.element_of(images[i]))) {
        return false;
      }
      gp.push_back(g.permutation(gens[i]));
      ip.push_back(g.permutation(images[i]));
    }
    constexpr auto             none = CosetTable::undef;
    std::vector<std::uint32_t> phi(g.order(), none);
    std::vector<std::uint32_t> queue{0};
    phi[0] = 0;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      auto x = queue[q];
      for (std::size_t i = 0; i < gp.size(); ++i) {
        auto y   = gp[i][x];
        auto img = ip[i][phi[x]];
        if (phi[y] == none) {
          phi[y] = img;
          queue.push_back(y);
        } else if (phi[y] != img) {
          return false;
        }
      }
    }
    // Injective on H (hence bijective onto H).
    std::vector<bool> hit(g.order(), false);
    for (auto x : queue) {
      if (hit[phi[x]]) {
        return false;
      }
      hit[phi[x]] = true;
    }
    return true;
  }

  // All elements of order 2 in the subgroup h.
  inline std::vector<ElementIndex> involutions(GroupRep const&       g,
                                               SubgroupHandle const& h) {
    std::vector<ElementIndex> out;
    for (auto x : h.elements()) {
      if (x != identity_element && g.multiply(x, x) == identity_element) {
        out.push_back(x);
      }
    }
    return out;
  }

  // Is the subgroup h generated by its involutions? The trivial group counts
  // as generated by the empty set.
  inline bool generated_by_involutions(GroupRep const&       g,
                                       SubgroupHandle const& h) {
    detail::GrowingSubgroup s(g);
    for (auto x : involutions(g, h)) {
      s.add(x);
      if (s.size() == h.size()) {
        break;
      }
    }
    return s.size() == h.size();
  }

  inline SubgroupHandle whole_group(GroupRep const& g) {
    std::vector<Word> gens;
    for (std::uint32_t i = 0; i < g.num_generators(); ++i) {
      gens.push_back(Word::generator(i));
    }
    return SubgroupHandle(std::vector<bool>(g.order(), true), std::move(gens));
  }

  inline bool generated_by_involutions(GroupRep const& g) {
    return generated_by_involutions(g, whole_group(g));
  }

  // Centraliser of the given generators inside the subgroup h; with the
  // group's own generators this is the centre.
  inline SubgroupHandle centralizer(GroupRep const&       g,
                                    SubgroupHandle const& h,
                                    std::span<Word const> gens) {
    std::vector<Permutation>  perms;
    std::vector<ElementIndex> gen_elts;
    for (auto const& w : gens) {
      perms.push_back(g.permutation(w));
      gen_elts.push_back(g.element_of(w));
    }
    std::vector<bool> member(g.order(), false);
    std::vector<Word> words;
    for (auto z : h.elements()) {
      bool central = true;
      for (std::size_t i = 0; i < gens.size() && central; ++i) {
        central = ElementIndex{perms[i][z.value]} == g.multiply(gen_elts[i], z);
      }
      if (central) {
        member[z.value] = true;
        words.push_back(g.element_word(z));
      }
    }
    return SubgroupHandle(std::move(member), std::move(words));
  }

  inline SubgroupHandle center(GroupRep const& g) {
    auto all = whole_group(g);
    return centralizer(g, all, all.generator_words());
  }

  // Derived subgroup of <gens>: normal closure (in <gens>) of the
  // commutators of the generators.
  inline SubgroupHandle derived_subgroup(GroupRep const&       g,
                                         std::span<Word const> gens) {
    std::vector<Word> comms;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (std::size_t j = i + 1; j < gens.size(); ++j) {
        comms.push_back(invert(gens[i]) * invert(gens[j]) * gens[i] * gens[j]);
      }
    }
    return normal_closure(g, comms, gens);
  }

}  // namespace rotamap

#endif  // ROTAMAP_GROUP_HPP_
