#pragma once

// Random valid-by-construction model sources for property tests. Inheritance
// edges always point from a higher class index to a lower one, so generated
// (and augmented) models never contain inheritance cycles; attribute markers
// are only emitted when they agree with the type, so resolution never fails.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

namespace quml::testing {

struct GenType {
  std::string name;
  bool quantum = false;
};

struct GenAttr {
  std::string name;
  std::string type;     // type name, class name, or type with [len]
  bool marked = false;  // `quantum` prefix; only for quantum-typed attributes
  bool is_private = false;
};

struct GenOp {
  std::string name;
  std::vector<std::pair<std::string, std::string>> params;
  std::string ret;  // empty = omitted
  bool internal_quantum = false;
  bool is_private = false;
};

struct GenClass {
  std::string name;
  bool marked = false;
  std::vector<GenAttr> attrs;
  std::vector<GenOp> ops;
};

struct GenRel {
  enum class Kind { inherit, compose, aggregate, assoc } kind = Kind::assoc;
  std::size_t a = 0;  // subclass / whole / left
  std::size_t b = 0;  // superclass / part / right
};

struct GenMsg {
  bool ret = false;
  bool qmsg = false;
  std::size_t from = 0;  // lifeline indices
  std::size_t to = 0;
  std::string op;
};

struct GenSeq {
  std::string name;
  std::vector<std::size_t> lifelines;  // class indices; alias is l<i>
  std::vector<GenMsg> messages;
};

struct GenModel {
  std::string name = "gen";
  std::vector<GenType> user_types;
  std::vector<GenClass> classes;
  std::vector<GenRel> rels;
  std::vector<GenSeq> seqs;
  int counter = 0;  // for unique member names across augmentations
};

inline const char* kClassicalBuiltins[] = {"int", "uint", "float", "bool", "string"};
inline const char* kQuantumBuiltins[] = {"qubit", "qstate", "graphstate"};

class ModelGen {
 public:
  explicit ModelGen(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }

  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  bool chance(int percent) { return static_cast<int>(pick(100)) < percent; }

  std::string data_type(const GenModel& gm) {
    const std::size_t n_classical = 5 + count_user(gm, false);
    const std::size_t n_quantum = 3 + count_user(gm, true);
    std::string base;
    if (chance(40)) {
      base = quantum_type(gm, pick(n_quantum));
    } else {
      base = classical_type(gm, pick(n_classical));
    }
    if (chance(15)) base += "[" + std::to_string(1 + pick(8)) + "]";
    return base;
  }

  std::string classical_type(const GenModel& gm, std::size_t i) {
    if (i < 5) return kClassicalBuiltins[i];
    i -= 5;
    for (const GenType& t : gm.user_types) {
      if (!t.quantum && i-- == 0) return t.name;
    }
    return "int";
  }

  std::string quantum_type(const GenModel& gm, std::size_t i) {
    if (i < 3) return kQuantumBuiltins[i];
    i -= 3;
    for (const GenType& t : gm.user_types) {
      if (t.quantum && i-- == 0) return t.name;
    }
    return "qubit";
  }

  static bool type_is_quantum(const GenModel& gm, const std::string& type) {
    const std::string base = type.substr(0, type.find('['));
    for (const char* q : kQuantumBuiltins) {
      if (base == q) return true;
    }
    for (const GenType& t : gm.user_types) {
      if (t.name == base) return t.quantum;
    }
    return false;
  }

  GenAttr make_attr(GenModel& gm, bool allow_class_type) {
    GenAttr a;
    a.name = "a" + std::to_string(gm.counter++);
    if (allow_class_type && !gm.classes.empty() && chance(25)) {
      a.type = gm.classes[pick(gm.classes.size())].name;
    } else {
      a.type = data_type(gm);
      if (type_is_quantum(gm, a.type) && chance(50)) a.marked = true;
    }
    a.is_private = chance(25);
    return a;
  }

  GenOp make_op(GenModel& gm) {
    GenOp o;
    o.name = "f" + std::to_string(gm.counter++);
    const std::size_t n_params = pick(3);
    for (std::size_t i = 0; i < n_params; ++i) {
      o.params.emplace_back("p" + std::to_string(i), data_type(gm));
    }
    if (chance(50)) o.ret = data_type(gm);
    o.internal_quantum = chance(15);
    o.is_private = chance(25);
    return o;
  }

  GenModel random_model(std::size_t max_classes = 12) {
    GenModel gm;
    const std::size_t n_types = pick(3);
    for (std::size_t i = 0; i < n_types; ++i) {
      gm.user_types.push_back({"UT" + std::to_string(i), chance(50)});
    }
    const std::size_t n = 1 + pick(max_classes);
    for (std::size_t c = 0; c < n; ++c) {
      GenClass cls;
      cls.name = "C" + std::to_string(c);
      cls.marked = chance(50);
      gm.classes.push_back(std::move(cls));
    }
    for (std::size_t c = 0; c < n; ++c) {
      const std::size_t n_attrs = pick(4);
      for (std::size_t i = 0; i < n_attrs; ++i) {
        gm.classes[c].attrs.push_back(make_attr(gm, true));
      }
      const std::size_t n_ops = pick(4);
      for (std::size_t i = 0; i < n_ops; ++i) gm.classes[c].ops.push_back(make_op(gm));
    }
    for (std::size_t c = 1; c < n; ++c) {
      if (chance(30)) gm.rels.push_back({GenRel::Kind::inherit, c, pick(c)});
    }
    const std::size_t n_rels = pick(n + 2);
    for (std::size_t i = 0; i < n_rels; ++i) {
      GenRel r;
      const std::size_t kind = pick(3);
      r.kind = kind == 0   ? GenRel::Kind::compose
               : kind == 1 ? GenRel::Kind::aggregate
                           : GenRel::Kind::assoc;
      r.a = pick(n);
      r.b = pick(n);
      if (r.kind != GenRel::Kind::assoc && r.a == r.b) continue;
      gm.rels.push_back(r);
    }
    return gm;
  }

  // Random sequence diagrams on top of an existing class structure. Message
  // operation names mostly hit real members (any visibility, own or not) and
  // occasionally miss entirely, so every validator outcome is reachable.
  void add_sequences(GenModel& gm) {
    const std::size_t n_seqs = pick(3);
    for (std::size_t s = 0; s < n_seqs; ++s) {
      GenSeq seq;
      seq.name = "seq" + std::to_string(s);
      const std::size_t n_lifelines = 1 + pick(4);
      for (std::size_t l = 0; l < n_lifelines; ++l) {
        seq.lifelines.push_back(pick(gm.classes.size()));
      }
      const std::size_t n_msgs = pick(6);
      for (std::size_t i = 0; i < n_msgs; ++i) {
        GenMsg msg;
        msg.ret = chance(30);
        msg.qmsg = chance(40);
        msg.from = pick(seq.lifelines.size());
        msg.to = pick(seq.lifelines.size());
        if (chance(12)) {
          msg.op = "nosuch" + std::to_string(i);
        } else {
          const GenClass& looked_up =
              gm.classes[seq.lifelines[msg.ret ? msg.from : msg.to]];
          if (!looked_up.ops.empty() && chance(85)) {
            msg.op = looked_up.ops[pick(looked_up.ops.size())].name;
          } else {
            msg.op = "nosuch" + std::to_string(i);
          }
        }
        seq.messages.push_back(std::move(msg));
      }
      gm.seqs.push_back(std::move(seq));
    }
  }

  // Adds a class, member or relationship; never removes anything and never
  // introduces an inheritance cycle.
  void augment(GenModel& gm) {
    switch (pick(4)) {
      case 0: {
        GenClass cls;
        cls.name = "C" + std::to_string(gm.classes.size());
        cls.marked = chance(50);
        if (chance(60)) cls.attrs.push_back(make_attr(gm, true));
        const std::size_t idx = gm.classes.size();
        gm.classes.push_back(std::move(cls));
        if (idx > 0 && chance(50)) {
          gm.rels.push_back({GenRel::Kind::inherit, idx, pick(idx)});
        }
        break;
      }
      case 1:
        gm.classes[pick(gm.classes.size())].attrs.push_back(make_attr(gm, true));
        break;
      case 2:
        gm.classes[pick(gm.classes.size())].ops.push_back(make_op(gm));
        break;
      default: {
        if (gm.classes.size() < 2) {
          gm.classes[0].ops.push_back(make_op(gm));
          break;
        }
        GenRel r;
        const std::size_t kind = pick(4);
        if (kind == 0) {
          std::size_t hi = 1 + pick(gm.classes.size() - 1);
          r = {GenRel::Kind::inherit, hi, pick(hi)};
        } else {
          r.kind = kind == 1   ? GenRel::Kind::compose
                   : kind == 2 ? GenRel::Kind::aggregate
                               : GenRel::Kind::assoc;
          r.a = pick(gm.classes.size());
          r.b = pick(gm.classes.size());
          if (r.kind != GenRel::Kind::assoc && r.a == r.b) r.b = (r.b + 1) % gm.classes.size();
        }
        gm.rels.push_back(r);
        break;
      }
    }
  }

 private:
  static std::size_t count_user(const GenModel& gm, bool quantum) {
    std::size_t n = 0;
    for (const GenType& t : gm.user_types) {
      if (t.quantum == quantum) ++n;
    }
    return n;
  }

  std::mt19937_64 rng_;
};

inline std::string emit(const GenModel& gm, const std::vector<std::size_t>* class_order = nullptr) {
  std::string src = "model " + gm.name + "\n";
  for (const GenType& t : gm.user_types) {
    src += std::string(t.quantum ? "quantum" : "classical") + " type " + t.name + "\n";
  }
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < gm.classes.size(); ++i) order.push_back(i);
  if (class_order != nullptr) order = *class_order;
  for (std::size_t c : order) {
    const GenClass& cls = gm.classes[c];
    src += std::string(cls.marked ? "quantum " : "") + "class " + cls.name + " {\n";
    for (const GenAttr& a : cls.attrs) {
      src += "  ";
      if (a.marked) src += "quantum ";
      if (a.is_private) src += "private ";
      src += "attr " + a.name + ": " + a.type + "\n";
    }
    for (const GenOp& o : cls.ops) {
      src += "  ";
      if (o.internal_quantum) src += "quantum ";
      if (o.is_private) src += "private ";
      src += "op " + o.name + "(";
      for (std::size_t i = 0; i < o.params.size(); ++i) {
        if (i > 0) src += ", ";
        src += o.params[i].first + ": " + o.params[i].second;
      }
      src += ")";
      if (!o.ret.empty()) src += " -> " + o.ret;
      src += "\n";
    }
    src += "}\n";
  }
  for (const GenRel& r : gm.rels) {
    switch (r.kind) {
      case GenRel::Kind::inherit:
        src += "inherit " + gm.classes[r.a].name + " from " + gm.classes[r.b].name + "\n";
        break;
      case GenRel::Kind::compose:
        src += "compose " + gm.classes[r.a].name + " has " + gm.classes[r.b].name + "\n";
        break;
      case GenRel::Kind::aggregate:
        src += "aggregate " + gm.classes[r.a].name + " has " + gm.classes[r.b].name + "\n";
        break;
      case GenRel::Kind::assoc:
        src += "assoc " + gm.classes[r.a].name + " with " + gm.classes[r.b].name + "\n";
        break;
    }
  }
  for (const GenSeq& seq : gm.seqs) {
    src += "sequence " + seq.name + " {\n";
    for (std::size_t l = 0; l < seq.lifelines.size(); ++l) {
      src += "  lifeline l" + std::to_string(l) + ": " + gm.classes[seq.lifelines[l]].name +
             "\n";
    }
    for (const GenMsg& msg : seq.messages) {
      src += std::string("  ") + (msg.qmsg ? "qmsg" : "msg") + " l" + std::to_string(msg.from) +
             (msg.ret ? " --> l" : " -> l") + std::to_string(msg.to) + " : " + msg.op + "\n";
    }
    src += "}\n";
  }
  return src;
}

// Consistent renaming of every user-declared identifier (classes, user types,
// members, params). Built-in type references stay untouched.
inline GenModel alpha_rename(const GenModel& gm, const std::string& prefix) {
  GenModel out = gm;
  auto declared = [&](const std::string& base) {
    for (const GenType& t : gm.user_types) {
      if (t.name == base) return true;
    }
    for (const GenClass& c : gm.classes) {
      if (c.name == base) return true;
    }
    return false;
  };
  auto rename_type = [&](std::string& type) {
    const auto bracket = type.find('[');
    const std::string base = type.substr(0, bracket);
    if (declared(base)) {
      type = prefix + base + (bracket == std::string::npos ? "" : type.substr(bracket));
    }
  };
  out.name = prefix + out.name;
  for (GenType& t : out.user_types) t.name = prefix + t.name;
  for (GenClass& c : out.classes) {
    c.name = prefix + c.name;
    for (GenAttr& a : c.attrs) {
      a.name = prefix + a.name;
      rename_type(a.type);
    }
    for (GenOp& o : c.ops) {
      o.name = prefix + o.name;
      for (auto& p : o.params) {
        p.first = prefix + p.first;
        rename_type(p.second);
      }
      if (!o.ret.empty()) rename_type(o.ret);
    }
  }
  for (GenSeq& seq : out.seqs) {
    seq.name = prefix + seq.name;
    for (GenMsg& msg : seq.messages) msg.op = prefix + msg.op;
  }
  return out;
}

}  // namespace quml::testing
