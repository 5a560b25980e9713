#include "adhesivekit/finset.hpp"

#include <algorithm>
#include <numeric>

namespace adk {

const char* err_name(Err e) {
  switch (e) {
    case Err::DomainMismatch: return "DomainMismatch";
    case Err::NotSimple: return "NotSimple";
    case Err::NotMono: return "NotMono";
    case Err::UnknownElement: return "UnknownElement";
    case Err::ArityMismatch: return "ArityMismatch";
    case Err::TargetNotSingleton: return "TargetNotSingleton";
    case Err::CapabilityMissing: return "CapabilityMissing";
    case Err::UnknownCategory: return "UnknownCategory";
    case Err::NotRegularMono: return "NotRegularMono";
    case Err::NoPushoutWitness: return "NoPushoutWitness";
    case Err::InsufficientSignature: return "InsufficientSignature";
    case Err::NonCommuting: return "NonCommuting";
    case Err::BudgetExceeded: return "BudgetExceeded";
    case Err::InvalidValue: return "InvalidValue";
    case Err::ComponentColimitFailed: return "ComponentColimitFailed";
    case Err::NoPushout: return "NoPushout";
    case Err::NoComplement: return "NoComplement";
    case Err::Internal: return "Internal";
  }
  return "Unknown";
}

FinSet::FinSet(std::vector<std::string> elems) : elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end());
  auto dup = std::adjacent_find(elems_.begin(), elems_.end());
  require(dup == elems_.end(), Err::InvalidValue,
          dup == elems_.end() ? "" : "duplicate element '" + *dup + "'");
}

FinSet FinSet::of(std::initializer_list<std::string> xs) {
  return FinSet(std::vector<std::string>(xs));
}

bool FinSet::contains(const std::string& x) const {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

bool FinSet::subset_of(const FinSet& other) const {
  return std::includes(other.elems_.begin(), other.elems_.end(),
                       elems_.begin(), elems_.end());
}

FinFunction::FinFunction(FinSet dom, FinSet cod, std::map<std::string, std::string> map)
    : dom_(std::move(dom)), cod_(std::move(cod)), map_(std::move(map)) {
  require(map_.size() == dom_.size(), Err::InvalidValue,
          "function table size does not match domain size");
  for (const auto& [x, y] : map_) {
    require(dom_.contains(x), Err::InvalidValue, "table key '" + x + "' not in domain");
    require(cod_.contains(y), Err::InvalidValue,
            "value '" + y + "' for '" + x + "' not in codomain");
  }
}

FinFunction FinFunction::identity(const FinSet& s) {
  std::map<std::string, std::string> m;
  for (const auto& x : s.elements()) m.emplace(x, x);
  return FinFunction(s, s, std::move(m));
}

const std::string& FinFunction::at(const std::string& x) const {
  auto it = map_.find(x);
  require(it != map_.end(), Err::UnknownElement, "'" + x + "' not in domain");
  return it->second;
}

FinFunction compose(const FinFunction& g, const FinFunction& f) {
  require(f.cod() == g.dom(), Err::DomainMismatch,
          "compose: codomain of inner function differs from domain of outer");
  std::map<std::string, std::string> m;
  for (const auto& [x, y] : f.mapping()) m.emplace(x, g.at(y));
  return FinFunction(f.dom(), g.cod(), std::move(m));
}

bool is_injective(const FinFunction& f) {
  std::vector<std::string> vals;
  vals.reserve(f.mapping().size());
  for (const auto& [x, y] : f.mapping()) vals.push_back(y);
  std::sort(vals.begin(), vals.end());
  return std::adjacent_find(vals.begin(), vals.end()) == vals.end();
}

bool is_surjective(const FinFunction& f) { return image(f) == f.cod(); }

bool is_bijective(const FinFunction& f) { return is_injective(f) && is_surjective(f); }

FinFunction inverse(const FinFunction& f) {
  require(is_bijective(f), Err::InvalidValue, "inverse of a non-bijective function");
  std::map<std::string, std::string> m;
  for (const auto& [x, y] : f.mapping()) m.emplace(y, x);
  return FinFunction(f.cod(), f.dom(), std::move(m));
}

FinSet image(const FinFunction& f) {
  std::vector<std::string> vals;
  for (const auto& [x, y] : f.mapping()) vals.push_back(y);
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  return FinSet(std::move(vals));
}

FinFunction restrict_to(const FinFunction& f, const FinSet& sub) {
  require(sub.subset_of(f.dom()), Err::DomainMismatch, "restriction set is not a subset");
  std::map<std::string, std::string> m;
  for (const auto& x : sub.elements()) m.emplace(x, f.at(x));
  return FinFunction(sub, f.cod(), std::move(m));
}

Word::Word(FinSet alphabet, std::vector<std::string> letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
  for (const auto& l : letters_)
    require(alphabet_.contains(l), Err::UnknownElement, "letter '" + l + "' not in alphabet");
}

Word star_map(const FinFunction& f, const Word& w) {
  require(w.alphabet() == f.dom(), Err::DomainMismatch, "word alphabet differs from domain");
  std::vector<std::string> out;
  out.reserve(w.size());
  for (const auto& l : w.letters()) out.push_back(f.at(l));
  return Word(f.cod(), std::move(out));
}

std::string escape_token(const std::string& s, const std::string& specials) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '\\' || specials.find(c) != std::string::npos) out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

namespace {

// Splits an escaped string on unescaped occurrences of `sep`, undoing escapes.
std::vector<std::string> split_unescape(const std::string& s, char sep) {
  std::vector<std::string> parts(1);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\\' && i + 1 < s.size()) {
      parts.back().push_back(s[++i]);
    } else if (s[i] == sep) {
      parts.emplace_back();
    } else {
      parts.back().push_back(s[i]);
    }
  }
  return parts;
}

}  // namespace

std::string pair_token(const std::string& a, const std::string& b) {
  return "(" + escape_token(a, "(),") + "," + escape_token(b, "(),") + ")";
}

std::pair<std::string, std::string> split_pair_token(const std::string& t) {
  auto parts = split_tuple_token(t);
  require(parts.size() == 2, Err::InvalidValue, "not a pair token: '" + t + "'");
  return {parts[0], parts[1]};
}

std::string tuple_token(const std::vector<std::string>& parts) {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out.push_back(',');
    out += escape_token(parts[i], "(),");
  }
  return out + ")";
}

std::vector<std::string> split_tuple_token(const std::string& t) {
  require(t.size() >= 2 && t.front() == '(' && t.back() == ')', Err::InvalidValue,
          "not a tuple token: '" + t + "'");
  return split_unescape(t.substr(1, t.size() - 2), ',');
}

std::string class_token(std::vector<std::string> members) {
  for (auto& m : members) m = escape_token(m, "|");
  std::sort(members.begin(), members.end());
  std::string out;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out.push_back('|');
    out += members[i];
  }
  return out;
}

std::vector<std::string> split_class_token(const std::string& t) {
  return split_unescape(t, '|');
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  }
  void unite(int i, int j) { parent[find(i)] = find(j); }
};

// Characterising properties of a Set pushout along an injective m; these are
// theorems about the construction, so a failure indicates a bug and is
// reported as Internal.
void assert_pushout_laws(const FinFunction& m, const FinFunction& f,
                         const SetPushout& po) {
  const auto& A = m.dom().elements();
  const auto& B = f.cod().elements();
  const auto& C = m.cod().elements();
  const FinSet mA = image(m);
  const FinFunction& g = po.from_c;
  const FinFunction& n = po.from_b;

  require(is_injective(n), Err::Internal, "pushout law 1: n not injective");

  for (const auto& d : po.apex.elements()) {
    int nb = 0, gc_out = 0;
    for (const auto& b : B)
      if (n.at(b) == d) ++nb;
    for (const auto& c : C)
      if (!mA.contains(c) && g.at(c) == d) ++gc_out;
    require(nb + gc_out == 1, Err::Internal,
            "pushout laws 2/3: apex element '" + d + "' not uniquely covered");
  }

  for (const auto& c1 : C)
    for (const auto& c2 : C) {
      if (c1 >= c2) continue;
      bool collide = g.at(c1) == g.at(c2);
      bool witnessed = false;
      for (const auto& a1 : A) {
        if (m.at(a1) != c1) continue;
        for (const auto& a2 : A)
          if (m.at(a2) == c2 && f.at(a1) == f.at(a2)) witnessed = true;
      }
      require(collide == witnessed, Err::Internal,
              "pushout law 4: g-collision mismatch on '" + c1 + "','" + c2 + "'");
    }

  for (const auto& b : B)
    for (const auto& c : C) {
      bool meet = n.at(b) == g.at(c);
      bool witnessed = false;
      for (const auto& a : A)
        if (m.at(a) == c && f.at(a) == b) witnessed = true;
      require(meet == witnessed, Err::Internal,
              "pushout law 5: n/g interaction mismatch on '" + b + "','" + c + "'");
    }
}

}  // namespace

SetPushout pushout_set(const FinFunction& m, const FinFunction& f) {
  require(m.dom() == f.dom(), Err::DomainMismatch, "pushout legs must share their domain");
  const auto& B = f.cod().elements();
  const auto& C = m.cod().elements();
  UnionFind uf(B.size() + C.size());
  auto b_index = [&](const std::string& x) {
    return int(std::lower_bound(B.begin(), B.end(), x) - B.begin());
  };
  auto c_index = [&](const std::string& x) {
    return int(B.size() + (std::lower_bound(C.begin(), C.end(), x) - C.begin()));
  };
  for (const auto& a : m.dom().elements()) uf.unite(b_index(f.at(a)), c_index(m.at(a)));

  std::map<int, std::vector<std::string>> members;
  auto tagged = [&](std::size_t i) {
    return i < B.size() ? "B:" + escape_token(B[i], "|")
                        : "C:" + escape_token(C[i - B.size()], "|");
  };
  for (std::size_t i = 0; i < B.size() + C.size(); ++i)
    members[uf.find(int(i))].push_back(tagged(i));

  std::map<int, std::string> name_of_root;
  std::vector<std::string> apex_elems;
  for (auto& [root, mem] : members) {
    std::sort(mem.begin(), mem.end());
    std::string name;
    for (std::size_t i = 0; i < mem.size(); ++i) {
      if (i) name.push_back('|');
      name += mem[i];
    }
    name_of_root[root] = name;
    apex_elems.push_back(name);
  }
  FinSet apex(std::move(apex_elems));

  std::map<std::string, std::string> gmap, nmap;
  for (const auto& c : C) gmap.emplace(c, name_of_root[uf.find(c_index(c))]);
  for (const auto& b : B) nmap.emplace(b, name_of_root[uf.find(b_index(b))]);
  SetPushout po{apex, FinFunction(m.cod(), apex, std::move(gmap)),
                FinFunction(f.cod(), apex, std::move(nmap))};
  if (is_injective(m)) assert_pushout_laws(m, f, po);
  return po;
}

SetPullback pullback_set(const FinFunction& g, const FinFunction& n) {
  require(g.cod() == n.cod(), Err::DomainMismatch, "pullback legs must share their codomain");
  std::vector<std::string> elems;
  std::map<std::string, std::string> pc, pb;
  for (const auto& c : g.dom().elements())
    for (const auto& b : n.dom().elements())
      if (g.at(c) == n.at(b)) {
        std::string t = pair_token(c, b);
        elems.push_back(t);
        pc.emplace(t, c);
        pb.emplace(t, b);
      }
  FinSet apex(std::move(elems));
  return SetPullback{apex, FinFunction(apex, g.dom(), std::move(pc)),
                     FinFunction(apex, n.dom(), std::move(pb))};
}

SetEqualizer equalizer_set(const FinFunction& f, const FinFunction& g) {
  require(f.dom() == g.dom() && f.cod() == g.cod(), Err::DomainMismatch,
          "equalizer needs a parallel pair");
  std::vector<std::string> elems;
  for (const auto& x : f.dom().elements())
    if (f.at(x) == g.at(x)) elems.push_back(x);
  FinSet apex(std::move(elems));
  std::map<std::string, std::string> inc;
  for (const auto& x : apex.elements()) inc.emplace(x, x);
  return SetEqualizer{apex, FinFunction(apex, f.dom(), std::move(inc))};
}

SetCoproduct coproduct_set(const std::vector<FinSet>& parts) {
  std::vector<std::string> elems;
  std::vector<std::map<std::string, std::string>> maps(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (const auto& x : parts[i].elements()) {
      std::string t = std::to_string(i) + ":" + escape_token(x, ":");
      elems.push_back(t);
      maps[i].emplace(x, t);
    }
  FinSet apex(std::move(elems));
  SetCoproduct out{apex, {}};
  for (std::size_t i = 0; i < parts.size(); ++i)
    out.inject.emplace_back(parts[i], apex, std::move(maps[i]));
  return out;
}

SetProduct product_set(const std::vector<FinSet>& parts) {
  std::vector<std::string> elems;
  std::vector<std::map<std::string, std::string>> maps(parts.size());
  std::vector<std::size_t> idx(parts.size(), 0);
  bool any_empty = false;
  for (const auto& p : parts)
    if (p.empty()) any_empty = true;
  if (!any_empty) {
    while (true) {
      std::vector<std::string> tup;
      for (std::size_t i = 0; i < parts.size(); ++i) tup.push_back(parts[i].elements()[idx[i]]);
      std::string t = tuple_token(tup);
      elems.push_back(t);
      for (std::size_t i = 0; i < parts.size(); ++i) maps[i].emplace(t, tup[i]);
      std::size_t k = parts.size();
      while (k > 0) {
        if (++idx[k - 1] < parts[k - 1].size()) break;
        idx[k - 1] = 0;
        --k;
      }
      if (k == 0) break;
    }
  }
  FinSet apex(std::move(elems));
  SetProduct out{apex, {}};
  for (std::size_t i = 0; i < parts.size(); ++i)
    out.project.emplace_back(apex, parts[i], std::move(maps[i]));
  return out;
}

std::vector<FinFunction> all_functions(const FinSet& dom, const FinSet& cod) {
  std::vector<FinFunction> out;
  if (dom.empty()) {
    out.push_back(FinFunction(dom, cod, {}));
    return out;
  }
  if (cod.empty()) return out;
  std::vector<std::size_t> pick(dom.size(), 0);
  while (true) {
    std::map<std::string, std::string> m;
    for (std::size_t i = 0; i < dom.size(); ++i)
      m.emplace(dom.elements()[i], cod.elements()[pick[i]]);
    out.push_back(FinFunction(dom, cod, std::move(m)));
    std::size_t k = dom.size();
    while (k > 0) {
      if (++pick[k - 1] < cod.size()) break;
      pick[k - 1] = 0;
      --k;
    }
    if (k == 0) break;
  }
  return out;
}

SetQuotient quotient_set(const FinSet& s,
                         const std::vector<std::pair<std::string, std::string>>& rel) {
  const auto& xs = s.elements();
  UnionFind uf(xs.size());
  auto index = [&](const std::string& x) {
    require(s.contains(x), Err::UnknownElement, "'" + x + "' not in quotiented set");
    return int(std::lower_bound(xs.begin(), xs.end(), x) - xs.begin());
  };
  for (const auto& [x, y] : rel) uf.unite(index(x), index(y));
  std::map<int, std::vector<std::string>> members;
  for (std::size_t i = 0; i < xs.size(); ++i) members[uf.find(int(i))].push_back(xs[i]);
  std::map<int, std::string> name;
  std::vector<std::string> elems;
  for (auto& [root, mem] : members) {
    name[root] = class_token(mem);
    elems.push_back(name[root]);
  }
  FinSet classes(std::move(elems));
  std::map<std::string, std::string> proj;
  for (std::size_t i = 0; i < xs.size(); ++i) proj.emplace(xs[i], name[uf.find(int(i))]);
  return SetQuotient{classes, FinFunction(s, classes, std::move(proj))};
}

}  // namespace adk
