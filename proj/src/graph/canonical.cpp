#include "covermeasure/graph/canonical.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "covermeasure/core/error.hpp"

namespace covermeasure {

namespace {

using Matrix = std::vector<std::vector<int>>;

// Two rounds of local refinement: (loops, neighbour multiplicities), then
// the multiset of (multiplicity, neighbour class).
std::vector<int> vertex_classes(const Matrix& m) {
  const int n = static_cast<int>(m.size());
  std::vector<std::vector<int>> local(n);
  for (int v = 0; v < n; ++v) {
    std::vector<int> mults;
    for (int u = 0; u < n; ++u) {
      if (u != v && m[v][u] > 0) mults.push_back(m[v][u]);
    }
    std::sort(mults.begin(), mults.end());
    local[v].push_back(m[v][v]);
    local[v].insert(local[v].end(), mults.begin(), mults.end());
  }
  auto rank_of = [](const std::vector<std::vector<int>>& keys) {
    std::vector<std::vector<int>> sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> out;
    for (const auto& k : keys) {
      out.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), k) - sorted.begin()));
    }
    return out;
  };
  std::vector<int> first = rank_of(local);
  std::vector<std::vector<int>> refined(n);
  for (int v = 0; v < n; ++v) {
    std::vector<std::pair<int, int>> around;
    for (int u = 0; u < n; ++u) {
      if (u != v && m[v][u] > 0) around.emplace_back(m[v][u], first[u]);
    }
    std::sort(around.begin(), around.end());
    refined[v].push_back(first[v]);
    for (auto [mult, cls] : around) {
      refined[v].push_back(mult);
      refined[v].push_back(cls);
    }
  }
  return rank_of(refined);
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Matrix& m) : m_(m), n_(static_cast<int>(m.size())) {
    classes_ = vertex_classes(m);
    required_ = classes_;
    std::sort(required_.begin(), required_.end());
    used_.assign(n_, 0);
  }

  CanonicalForm run() {
    current_.reserve(n_);
    search(0, false);
    CanonicalForm form;
    form.order = best_order_;
    form.bytes = best_;
    return form;
  }

 private:
  // `better` means the prefix built so far is already strictly smaller
  // than the best complete encoding, so no further comparisons are needed.
  void search(int position, bool better) {
    if (position == n_) {
      best_ = encoding_;
      best_order_ = current_;
      have_best_ = true;
      return;
    }
    const std::size_t column_start = encoding_.size();
    for (int v = 0; v < n_; ++v) {
      if (used_[v] || classes_[v] != required_[position]) continue;
      for (int i = 0; i < position; ++i) encoding_.push_back(static_cast<std::uint8_t>(m_[current_[i]][v]));
      encoding_.push_back(static_cast<std::uint8_t>(m_[v][v]));

      bool child_better = better || !have_best_;
      bool prune = false;
      if (!child_better) {
        for (std::size_t i = column_start; i < encoding_.size(); ++i) {
          if (encoding_[i] < best_[i]) {
            child_better = true;
            break;
          }
          if (encoding_[i] > best_[i]) {
            prune = true;
            break;
          }
        }
      }
      if (!prune) {
        used_[v] = 1;
        current_.push_back(v);
        search(position + 1, child_better);
        current_.pop_back();
        used_[v] = 0;
        // The best encoding now shares this prefix; later siblings compare.
        better = false;
      }
      encoding_.resize(column_start);
    }
  }

  const Matrix& m_;
  int n_;
  std::vector<int> classes_;
  std::vector<int> required_;
  std::vector<char> used_;
  std::vector<int> current_;
  std::vector<std::uint8_t> encoding_;
  std::vector<std::uint8_t> best_;
  std::vector<int> best_order_;
  bool have_best_ = false;
};

std::vector<EdgeEnds> edges_from_matrix(const Matrix& m) {
  const int n = static_cast<int>(m.size());
  std::vector<EdgeEnds> edges;
  for (int v = 0; v < n; ++v) {
    for (int i = 0; i < m[v][v]; ++i) edges.emplace_back(v, v);
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      for (int i = 0; i < m[u][v]; ++i) edges.emplace_back(u, v);
    }
  }
  return edges;
}

}  // namespace

std::string CanonicalForm::hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * bytes.size());
  for (auto b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xF]);
  }
  return out;
}

CanonicalForm canonical_form(const TrivalentGraph& graph) {
  const Matrix m = graph.multiplicity_matrix();
  CanonicalForm form = CanonicalSearch(m).run();
  form.bytes.insert(form.bytes.begin(),
                    {static_cast<std::uint8_t>(graph.rank()), static_cast<std::uint8_t>(graph.vertex_count())});
  return form;
}

std::string graph_id(const TrivalentGraph& graph) { return canonical_form(graph).hex(); }

TrivalentGraph canonical_graph(const TrivalentGraph& graph) {
  const CanonicalForm form = canonical_form(graph);
  const Matrix m = graph.multiplicity_matrix();
  const int n = graph.vertex_count();
  Matrix relabeled(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) relabeled[i][j] = m[form.order[i]][form.order[j]];
  }
  const auto edges = edges_from_matrix(relabeled);
  return TrivalentGraph::from_edges(n, edges);
}

TrivalentGraph graph_from_id(std::string_view hex_id) {
  auto fail = [&]() -> TrivalentGraph {
    throw Error(ErrorCode::InvalidArgument, "malformed graph id '" + std::string(hex_id) + "'");
  };
  if (hex_id.size() % 2 != 0 || hex_id.size() < 4) return fail();
  std::vector<int> bytes;
  for (std::size_t i = 0; i < hex_id.size(); i += 2) {
    int value = 0;
    for (std::size_t j = i; j < i + 2; ++j) {
      const char c = hex_id[j];
      int digit;
      if (c >= '0' && c <= '9') digit = c - '0';
      else if (c >= 'a' && c <= 'f') digit = c - 'a' + 10;
      else return fail();
      value = value * 16 + digit;
    }
    bytes.push_back(value);
  }
  const int n = bytes[1];
  if (n < 2 || bytes.size() != static_cast<std::size_t>(2 + n * (n + 1) / 2)) return fail();
  Matrix m(n, std::vector<int>(n, 0));
  std::size_t pos = 2;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < j; ++i) m[i][j] = m[j][i] = bytes[pos++];
    m[j][j] = bytes[pos++];
  }
  TrivalentGraph graph = TrivalentGraph::from_edges(n, edges_from_matrix(m));
  if (graph.rank() != bytes[0] || graph_id(graph) != hex_id) return fail();
  return graph;
}

std::string common_name(const TrivalentGraph& graph) {
  static const std::map<std::string, std::string> names = {
      {graph_id(dumbbell_graph()), "dumbbell"},
      {graph_id(theta_graph()), "theta"},
      {graph_id(k4_graph()), "K4"},
  };
  auto it = names.find(graph_id(graph));
  return it == names.end() ? std::string() : it->second;
}

bool isomorphic(const TrivalentGraph& a, const TrivalentGraph& b) {
  return canonical_form(a).bytes == canonical_form(b).bytes;
}

}  // namespace covermeasure
