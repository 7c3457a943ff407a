#include "graphprod/word.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>

#include "graphprod/error.hpp"

namespace graphprod {

namespace {

// Reduce in place to a geodesic word: repeatedly find i < j with equal vertex
// whose intermediate syllables all commute with it, merge s_j into s_i, and
// drop trivial results. Each merge strictly shortens the word, so this
// terminates, and the fixpoint is exactly the normal form theorem's geodesic
// criterion.
void reduce_to_geodesic(std::vector<Syllable>& syls, const DefiningGraph& graph) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < syls.size() && !changed; ++i) {
      const VertexId v = syls[i].vertex;
      for (std::size_t j = i + 1; j < syls.size(); ++j) {
        if (syls[j].vertex == v) {
          const int merged = graph.group(v)->mul(syls[i].elem, syls[j].elem);
          syls.erase(syls.begin() + static_cast<std::ptrdiff_t>(j));
          if (merged == 0) {
            syls.erase(syls.begin() + static_cast<std::ptrdiff_t>(i));
          } else {
            syls[i].elem = merged;
          }
          changed = true;
          break;
        }
        if (!graph.adjacent(syls[j].vertex, v)) break;  // blocks any later j
      }
    }
  }
}

// Reorder a geodesic word into the lexicographically least shuffle: among the
// front-movable syllables (those commuting past everything earlier), emit the
// one with least vertex id. Front-movable syllables always carry distinct
// vertices (equal ones would have merged), so the choice is unique.
std::vector<Syllable> canonical_shuffle(std::vector<Syllable> rest, const DefiningGraph& graph) {
  std::vector<Syllable> out;
  out.reserve(rest.size());
  while (!rest.empty()) {
    std::size_t pick = rest.size();
    for (std::size_t k = 0; k < rest.size(); ++k) {
      bool movable = true;
      for (std::size_t j = 0; j < k && movable; ++j) {
        movable = graph.adjacent(rest[j].vertex, rest[k].vertex);
      }
      if (movable && (pick == rest.size() || rest[k].vertex < rest[pick].vertex)) {
        pick = k;
      }
      // Position 0 is always movable, so pick is set from the first pass on.
    }
    out.push_back(rest[pick]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return out;
}

void check_syllables(std::span<const Syllable> syls, const DefiningGraph& graph) {
  for (const Syllable& s : syls) {
    if (s.vertex < 0 || s.vertex >= graph.num_vertices()) {
      throw Error("UnknownVertex", "syllable vertex " + std::to_string(s.vertex));
    }
    if (s.elem <= 0 || s.elem >= graph.group(s.vertex)->order()) {
      throw Error("VertexGroupMismatch",
                  "element index " + std::to_string(s.elem) + " invalid for group of vertex " +
                      std::to_string(s.vertex) + " (order " +
                      std::to_string(graph.group(s.vertex)->order()) + ")");
    }
  }
}

}  // namespace

NormalForm normal_form(const Word& w, const DefiningGraph& graph) {
  check_syllables(w.syllables, graph);
  std::vector<Syllable> syls = w.syllables;
  reduce_to_geodesic(syls, graph);
  return NormalForm(canonical_shuffle(std::move(syls), graph));
}

NormalForm multiply(const NormalForm& x, const NormalForm& y, const DefiningGraph& graph) {
  Word w;
  w.syllables.reserve(x.length() + y.length());
  w.syllables.insert(w.syllables.end(), x.syllables().begin(), x.syllables().end());
  w.syllables.insert(w.syllables.end(), y.syllables().begin(), y.syllables().end());
  return normal_form(w, graph);
}

NormalForm invert(const NormalForm& x, const DefiningGraph& graph) {
  Word w;
  w.syllables.reserve(x.length());
  for (auto it = x.syllables().rbegin(); it != x.syllables().rend(); ++it) {
    w.syllables.push_back(Syllable{it->vertex, graph.group(it->vertex)->inv(it->elem)});
  }
  return normal_form(w, graph);
}

std::set<VertexId> support(const NormalForm& x) {
  std::set<VertexId> supp;
  for (const Syllable& s : x.syllables()) supp.insert(s.vertex);
  return supp;
}

bool is_reduced_decomposition(std::span<const NormalForm> parts, const DefiningGraph& graph) {
  std::size_t total = 0;
  NormalForm product;
  for (const NormalForm& part : parts) {
    total += part.length();
    product = multiply(product, part, graph);
  }
  return product.length() == total;
}

ShuffleClass enumerate_normal_forms(const NormalForm& x, std::size_t cap,
                                    const DefiningGraph& graph) {
  ShuffleClass result;
  std::set<std::vector<Syllable>> seen;
  std::deque<std::vector<Syllable>> frontier;
  seen.insert(x.syllables());
  frontier.push_back(x.syllables());
  while (!frontier.empty()) {
    std::vector<Syllable> cur = std::move(frontier.front());
    frontier.pop_front();
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      if (graph.adjacent(cur[i].vertex, cur[i + 1].vertex)) {
        std::vector<Syllable> next = cur;
        std::swap(next[i], next[i + 1]);
        if (seen.insert(next).second) {
          if (seen.size() > cap) {
            result.overflow = true;
            seen.erase(next);
            frontier.clear();
            break;
          }
          frontier.push_back(std::move(next));
        }
      }
    }
  }
  result.words.assign(seen.begin(), seen.end());
  return result;
}

bool is_geodesic_word(std::span<const Syllable> syls, const DefiningGraph& graph) {
  for (std::size_t i = 0; i < syls.size(); ++i) {
    for (std::size_t j = i + 1; j < syls.size(); ++j) {
      if (syls[j].vertex == syls[i].vertex) return false;
      if (!graph.adjacent(syls[j].vertex, syls[i].vertex)) break;
    }
  }
  return true;
}

std::string NormalForm::key() const {
  if (syls_.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < syls_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(syls_[i].vertex);
    out += ':';
    out += std::to_string(syls_[i].elem);
  }
  return out;
}

}  // namespace graphprod
