#include "softtop/claims.hpp"

namespace softtop {

namespace {

SoftSet arg(const SpaceView& sv, const Assignment& a, int i) {
  return sv.from_key(a.set_keys[i]);
}

SoftSet ints(const SpaceView& sv, const SoftSet& f) { return sv.family.semi_interior(f); }
SoftSet cls(const SpaceView& sv, const SoftSet& f) { return sv.family.semi_closure(f); }
SoftSet exts(const SpaceView& sv, const SoftSet& f) { return sv.family.semi_exterior(f); }
SoftSet bds(const SpaceView& sv, const SoftSet& f) { return sv.family.semi_boundary(f); }

const char* bstr(bool b) { return b ? "true" : "false"; }

ClaimEval pass() { return {true, {}, {}}; }

ClaimEval eq(const char* ll, const SoftSet& l, const char* rl, const SoftSet& r) {
  if (l == r) return pass();
  return {false, std::string(ll) + " = " + l.to_string(),
          std::string(rl) + " = " + r.to_string()};
}

ClaimEval sub(const char* ll, const SoftSet& l, const char* rl, const SoftSet& r) {
  if (l.is_subset_of(r)) return pass();
  return {false, std::string(ll) + " = " + l.to_string(),
          std::string(rl) + " = " + r.to_string()};
}

ClaimEval iff(const char* ll, bool l, const char* rl, bool r) {
  if (l == r) return pass();
  return {false, std::string(ll) + " = " + bstr(l),
          std::string(rl) + " = " + bstr(r)};
}

using Eval = std::function<ClaimEval(const SpaceView&, const Assignment&)>;

Claim make(const char* id, ClaimStatus status, ClaimForm form, Guard guard,
           int arity, bool point, const char* statement, const char* note,
           Eval eval) {
  Claim c;
  c.id = id;
  c.status = status;
  c.form = form;
  c.guard = guard;
  c.set_arity = arity;
  c.has_point = point;
  c.statement = statement;
  c.note = note;
  c.eval = std::move(eval);
  return c;
}

constexpr auto BT = ClaimStatus::BelievedTrue;
constexpr auto SU = ClaimStatus::Suspect;
constexpr auto AM = ClaimStatus::Ambiguous;
constexpr auto CT = ClaimStatus::CorrectedTypo;
constexpr auto EQ = ClaimForm::Equality;
constexpr auto IN = ClaimForm::Inclusion;
constexpr auto IF = ClaimForm::Iff;
constexpr auto EX = ClaimForm::Existence;
constexpr auto GN = Guard::None;
constexpr auto GO = Guard::Open;
constexpr auto GS = Guard::SemiOpen;

// Shared right side of the P3.22.5 / P3.24.4 biconditionals: every point of
// G lies in some semi-open subset of G.
bool every_point_has_inner_nbd(const SpaceView& sv, const SoftSet& g) {
  for (int x = 0; x < sv.context()->universe_size(); ++x) {
    if (!g.has_point(x)) continue;
    if (!sv.family.is_semi_nbd(x, g)) return false;
  }
  return true;
}

std::vector<Claim> build_catalog() {
  std::vector<Claim> cat;

  cat.push_back(make(
      "T3.5.1", BT, EQ, GN, 0, false, "ints(Phi) = Phi and ints(Full) = Full", "",
      [](const SpaceView& sv, const Assignment&) {
        SoftSet phi = SoftSet::empty(sv.context());
        SoftSet full = SoftSet::full(sv.context());
        SoftSet l = ints(sv, phi);
        SoftSet r = ints(sv, full);
        if (l == phi && r == full) return pass();
        return ClaimEval{false, "ints(Phi) = " + l.to_string(),
                         "ints(Full) = " + r.to_string()};
      }));

  cat.push_back(make("T3.5.2", BT, IN, GN, 1, false, "ints(F) <= F", "",
                     [](const SpaceView& sv, const Assignment& a) {
                       SoftSet f = arg(sv, a, 0);
                       return sub("ints(F)", ints(sv, f), "F", f);
                     }));

  cat.push_back(make(
      "T3.5.3-corrected", CT, EQ, GN, 1, false, "ints(ints(F)) = ints(F)",
      "idempotence; the printed variant T3.5.3-printed has F on the right",
      [](const SpaceView& sv, const Assignment& a) {
        SoftSet i = ints(sv, arg(sv, a, 0));
        return eq("ints(ints(F))", ints(sv, i), "ints(F)", i);
      }));

  cat.push_back(make(
      "T3.5.3-printed", SU, EQ, GN, 1, false, "ints(ints(F)) = F",
      "as printed; fails whenever F is not semi-open",
      [](const SpaceView& sv, const Assignment& a) {
        SoftSet f = arg(sv, a, 0);
        return eq("ints(ints(F))", ints(sv, ints(sv, f)), "F", f);
      }));

  cat.push_back(make("T3.5.4", BT, IF, GN, 1, false,
                     "F is semi-open <=> ints(F) = F", "",
                     [](const SpaceView& sv, const Assignment& a) {
                       SoftSet f = arg(sv, a, 0);
                       return iff("F is semi-open", sv.family.contains(f),
                                  "ints(F) = F", ints(sv, f) == f);
                     }));

  cat.push_back(make("T3.5.5", BT, IN, GN, 2, false,
                     "F <= G implies ints(F) <= ints(G)", "",
                     [](const SpaceView& sv, const Assignment& a) {
                       SoftSet f = arg(sv, a, 0), g = arg(sv, a, 1);
                       if (!f.is_subset_of(g)) return pass();
                       return sub("ints(F)", ints(sv, f), "ints(G)", ints(sv, g));
                     }));

  cat.push_back(make("T3.5.6", BT, IN, GN, 2, false,
                     "ints(F) | ints(G) <= ints(F | G)", "",
                     [](const SpaceView& sv, const Assignment& a) {
                       SoftSet f = arg(sv, a, 0), g = arg(sv, a, 1);
                       return sub("ints(F) | ints(G)", ints(sv, f) | ints(sv, g),
                                  "ints(F | G)", ints(sv, f | g));
                     }));

  cat.push_back(make(
      "T3.6", SU, EQ, GN, 2, false, "ints(F) & ints(G) = ints(F & G)",
      "only <= is guaranteed; equality needs the semi-open family to be "
      "closed under intersection",
      [](const SpaceView& sv, const Assignment& a) {
        SoftSet f = arg(sv, a, 0), g = arg(sv, a, 1);
        return eq("ints(F) & ints(G)", ints(sv, f) & ints(sv, g), "ints(F & G)",
                  ints(sv, f & g));
      }));

  cat.push_back(make("T3.9.1", BT, EQ, GN, 1, false, "exts(F) = ints(F')", "",
                     [](const SpaceView& sv, const Assignment& a) {
                       SoftSet f = arg(sv, a, 0);
                       return eq("exts(F)", exts(sv, f), "ints(F')", ints(sv, ~f));
                     }));

  cat.push_back(make(
      "T3.9.2", SU, EQ, GN, 2, false, "exts(F | G) = exts(F) & exts(G)",
      "only <= is guaranteed, same failure mode as T3.6",
      [](const SpaceView& sv, const Assignment& a) {
        SoftSet f = arg(sv, a, 0), g = arg(sv, a, 1);
        return eq("exts(F | G)", exts(sv, f | g), "exts(F) & exts(G)",
                  exts(sv, f) & exts(sv, g));
      }));

  cat.push_back(make("T3.9.3-inclusion", BT, IN, GN, 2, false,
                     "exts(F) | exts(G) <= exts(F & G)", "",
                     [](const SpaceView& sv, const Assignment& a) {
                       SoftSet f = arg(sv, a, 0), g = arg(sv, a, 1);
                       return sub("exts(F) | exts(G)", exts(sv, f) | exts(sv, g),
                                  "exts(F & G)", exts(sv, f & g));
                     }));

  cat.push_back(make(
      "T3.9.3-eq", SU, EQ, GN, 2, false, "exts(F) | exts(G) = exts(F & G)",
      "the strengthening of T3.9.3-inclusion to equality; fails already in "
      "the built-in reference space",
      [](const SpaceView& sv, const Assignment& a) {
        SoftSet f = arg(sv, a, 0), g = arg(sv, a, 1);
        return eq("exts(F) | exts(G)", exts(sv, f) | exts(sv, g), "exts(F & G)",
                  exts(sv, f & g));
      }));

  cat.push_back(make("R3.12", BT, EQ, GN, 1, false, "bds(F) = bds(F')", "",
                     [](const SpaceView& sv, const Assignment& a) {
                       SoftSet f = arg(sv, a, 0);
                       return eq("bds(F)", bds(sv, f), "bds(F')", bds(sv, ~f));
                     }));

  cat.push_back(make("T3.13.1", BT, EQ, GN, 1, false, "cls(F) = ints(F) | bds(F)", "",
                     [](const SpaceView& sv, const Assignment& a) {
                       SoftSet f = arg(sv, a, 0);
                       return eq("cls(F)", cls(sv, f), "ints(F) | bds(F)",
                                 ints(sv, f) | bds(sv, f));
                     }));

  cat.push_back(make(
      "T3.13.2", BT, EQ, GN, 1, false,
      "bds(F) = cls(F) & cls(F') and bds(F) = cls(F) \\ ints(F)", "",
      [](const SpaceView& sv, const Assignment& a) {
        SoftSet f = arg(sv, a, 0);
        SoftSet b = bds(sv, f);
        SoftSet r1 = cls(sv, f) & cls(sv, ~f);
        SoftSet r2 = cls(sv, f) - ints(sv, f);
        if (b == r1 && b == r2) return pass();
        return ClaimEval{false, "bds(F) = " + b.to_string(),
                         "cls(F) & cls(F') = " + r1.to_string() +
                             "; cls(F) \\ ints(F) = " + r2.to_string()};
      }));

  cat.push_back(make("T3.13.3", BT, EQ, GN, 1, false,
                     "(bds(F))' = ints(F) | ints(F')", "",
                     [](const SpaceView& sv, const Assignment& a) {
                       SoftSet f = arg(sv, a, 0);
                       return eq("(bds(F))'", ~bds(sv, f), "ints(F) | ints(F')",
                                 ints(sv, f) | ints(sv, ~f));
                     }));

  cat.push_back(make("T3.13.4", BT, EQ, GN, 1, false, "ints(F) = F \\ bds(F)", "",
                     [](const SpaceView& sv, const Assignment& a) {
                       SoftSet f = arg(sv, a, 0);
                       return eq("ints(F)", ints(sv, f), "F \\ bds(F)",
                                 f - bds(sv, f));
                     }));

  cat.push_back(make(
      "R3.14.1-printed", AM, EQ, GN, 1, false, "bds(F) = cls(F)",
      "as printed the boundary is named the smallest semi-closed superset of "
      "F; that minimum is cls(F), so the literal reading is bds(F) = cls(F)",
      [](const SpaceView& sv, const Assignment& a) {
        SoftSet f = arg(sv, a, 0);
        return eq("bds(F)", bds(sv, f), "cls(F)", cls(sv, f));
      }));

  cat.push_back(make(
      "R3.14.1-corrected", CT, EQ, GN, 1, false,
      "cls(F) is the smallest semi-closed superset of F",
      "reads cls where the printed form says bds",
      [](const SpaceView& sv, const Assignment& a) {
        SoftSet f = arg(sv, a, 0);
        SoftSet c = cls(sv, f);
        bool semi_closed = sv.family.contains(~c);
        bool superset = f.is_subset_of(c);
        bool minimal = true;
        for (const auto& s : sv.family.semi_open_sets()) {
          SoftSet d = ~s;  // d runs over every semi-closed set
          if (f.is_subset_of(d) && !c.is_subset_of(d)) {
            minimal = false;
            break;
          }
        }
        if (semi_closed && superset && minimal) return pass();
        return ClaimEval{false, "cls(F) = " + c.to_string(),
                         std::string("semi-closed=") + bstr(semi_closed) +
                             " superset=" + bstr(superset) +
                             " minimal=" + bstr(minimal)};
      }));

  cat.push_back(make(
      "R3.14.2-printed", AM, EQ, GN, 1, false, "bds(F) = (bds(F))'",
      "as printed, with the complement applied to the whole boundary",
      [](const SpaceView& sv, const Assignment& a) {
        SoftSet b = bds(sv, arg(sv, a, 0));
        return eq("bds(F)", b, "(bds(F))'", ~b);
      }));

  cat.push_back(make(
      "R3.14.2-corrected", CT, EQ, GN, 1, false, "bds(F) = bds(F')",
      "complement moved inside the operator; coincides with R3.12",
      [](const SpaceView& sv, const Assignment& a) {
        SoftSet f = arg(sv, a, 0);
        return eq("bds(F)", bds(sv, f), "bds(F')", bds(sv, ~f));
      }));

  cat.push_back(make("T3.15.1", BT, IF, GN, 1, false,
                     "F is semi-open <=> F & bds(F) = Phi", "",
                     [](const SpaceView& sv, const Assignment& a) {
                       SoftSet f = arg(sv, a, 0);
                       return iff("F is semi-open", sv.family.contains(f),
                                  "F & bds(F) = Phi", (f & bds(sv, f)).is_empty());
                     }));

  cat.push_back(make("T3.15.2", BT, IF, GN, 1, false,
                     "F is semi-closed <=> bds(F) <= F", "",
                     [](const SpaceView& sv, const Assignment& a) {
                       SoftSet f = arg(sv, a, 0);
                       return iff("F is semi-closed", sv.family.contains(~f),
                                  "bds(F) <= F", bds(sv, f).is_subset_of(f));
                     }));

  cat.push_back(make("T3.16.1", BT, EQ, GN, 1, false, "bds(F) & ints(F) = Phi", "",
                     [](const SpaceView& sv, const Assignment& a) {
                       SoftSet f = arg(sv, a, 0);
                       return eq("bds(F) & ints(F)", bds(sv, f) & ints(sv, f),
                                 "Phi", SoftSet::empty(sv.context()));
                     }));

  cat.push_back(make(
      "T3.16.2", SU, EQ, GN, 1, false, "cls(ints(F)) = F \\ bds(F)",
      "the right side equals ints(F) by T3.13.4, so this asserts that the "
      "semi-interior is always semi-closed",
      [](const SpaceView& sv, const Assignment& a) {
        SoftSet f = arg(sv, a, 0);
        return eq("cls(ints(F))", cls(sv, ints(sv, f)), "F \\ bds(F)",
                  f - bds(sv, f));
      }));

  cat.push_back(make(
      "T3.17.1", SU, IN, GN, 2, false,
      "bds(F | G) <= (bds(F) & cls(G')) | (bds(G) & cls(F'))",
      "proof-consistent reading with cls around G'; the derivation still "
      "assumes cls distributes over union",
      [](const SpaceView& sv, const Assignment& a) {
        SoftSet f = arg(sv, a, 0), g = arg(sv, a, 1);
        return sub("bds(F | G)", bds(sv, f | g),
                   "(bds(F) & cls(G')) | (bds(G) & cls(F'))",
                   (bds(sv, f) & cls(sv, ~g)) | (bds(sv, g) & cls(sv, ~f)));
      }));

  cat.push_back(make(
      "T3.17.1b", SU, IN, GN, 2, false,
      "bds(F | G) <= (bds(F) & G') | (bds(G) & cls(F'))",
      "as printed, with a bare G' in the first bracket",
      [](const SpaceView& sv, const Assignment& a) {
        SoftSet f = arg(sv, a, 0), g = arg(sv, a, 1);
        return sub("bds(F | G)", bds(sv, f | g),
                   "(bds(F) & G') | (bds(G) & cls(F'))",
                   (bds(sv, f) & ~g) | (bds(sv, g) & cls(sv, ~f)));
      }));

  cat.push_back(make(
      "T3.17.2", SU, IN, GN, 2, false,
      "bds(F & G) <= (bds(F) & cls(G)) | (bds(G) & cls(F))", "",
      [](const SpaceView& sv, const Assignment& a) {
        SoftSet f = arg(sv, a, 0), g = arg(sv, a, 1);
        return sub("bds(F & G)", bds(sv, f & g),
                   "(bds(F) & cls(G)) | (bds(G) & cls(F))",
                   (bds(sv, f) & cls(sv, g)) | (bds(sv, g) & cls(sv, f)));
      }));

  cat.push_back(make(
      "T3.18", SU, EQ, GN, 1, false, "bds(bds(bds(F))) = bds(bds(F))",
      "idempotence from the second boundary on; kept under verdict because "
      "the printed derivation assumes cls distributes over union",
      [](const SpaceView& sv, const Assignment& a) {
        SoftSet b = bds(sv, arg(sv, a, 0));
        SoftSet bb = bds(sv, b);
        return eq("bds(bds(bds(F)))", bds(sv, bb), "bds(bds(F))", bb);
      }));

  cat.push_back(make(
      "T3.19.1-eq", AM, EQ, GO, 2, false,
      "F \\ ints(G) = int(F) \\ ints(G) for open F, G",
      "with the stated openness hypothesis, int(F) = F and both sides agree",
      [](const SpaceView& sv, const Assignment& a) {
        SoftSet f = arg(sv, a, 0), g = arg(sv, a, 1);
        SoftSet ig = ints(sv, g);
        return eq("F \\ ints(G)", f - ig, "int(F) \\ ints(G)",
                  sv.topology.interior(f) - ig);
      }));

  cat.push_back(make(
      "T3.19.1-sub", AM, IN, GN, 2, false,
      "int(F) \\ ints(G) <= F \\ ints(G) for arbitrary F, G",
      "the reading without the openness hypothesis; only the inclusion "
      "survives since int(F) <= F",
      [](const SpaceView& sv, const Assignment& a) {
        SoftSet f = arg(sv, a, 0), g = arg(sv, a, 1);
        SoftSet ig = ints(sv, g);
        return sub("int(F) \\ ints(G)", sv.topology.interior(f) - ig,
                   "F \\ ints(G)", f - ig);
      }));

  cat.push_back(make(
      "T3.19.2-eq", AM, EQ, GO, 1, false, "bds(ints(F)) = bds(F) for open F",
      "with the openness hypothesis, ints(F) = F and the equality is trivial",
      [](const SpaceView& sv, const Assignment& a) {
        SoftSet f = arg(sv, a, 0);
        return eq("bds(ints(F))", bds(sv, ints(sv, f)), "bds(F)", bds(sv, f));
      }));

  cat.push_back(make(
      "T3.19.2-sub", AM, IN, GN, 1, false,
      "bds(ints(F)) <= bds(F) for arbitrary F",
      "the reading without the openness hypothesis, weakened to inclusion",
      [](const SpaceView& sv, const Assignment& a) {
        SoftSet f = arg(sv, a, 0);
        return sub("bds(ints(F))", bds(sv, ints(sv, f)), "bds(F)", bds(sv, f));
      }));

  cat.push_back(make(
      "T3.20", BT, IF, GN, 1, false,
      "bds(F) = Phi <=> F is semi-open and semi-closed", "",
      [](const SpaceView& sv, const Assignment& a) {
        SoftSet f = arg(sv, a, 0);
        return iff("bds(F) = Phi", bds(sv, f).is_empty(),
                   "F is semi-open and semi-closed",
                   sv.family.contains(f) && sv.family.contains(~f));
      }));

  cat.push_back(make(
      "P3.3", BT, IN, GS, 1, true,
      "semi-open F is a semi-nbd of each x in points(F)", "",
      [](const SpaceView& sv, const Assignment& a) {
        SoftSet f = arg(sv, a, 0);
        int x = *a.point;
        if (!f.has_point(x)) return pass();
        if (sv.family.is_semi_nbd(x, f)) return pass();
        return ClaimEval{false, "x in points(F) = true",
                         "F is a semi-nbd of x = false"};
      }));

  cat.push_back(make(
      "P3.4.1", BT, EX, GN, 0, true, "every x has at least one semi-nbd", "",
      [](const SpaceView& sv, const Assignment& a) {
        int x = *a.point;
        if (sv.family.is_semi_nbd(x, SoftSet::full(sv.context()))) return pass();
        return ClaimEval{false, "no soft set is a semi-nbd of x", ""};
      }));

  cat.push_back(make(
      "P3.4.2", SU, IN, GN, 2, true,
      "F, G semi-nbds of x imply F & G is a semi-nbd of x",
      "needs a semi-open set inside the intersection; fails on spaces whose "
      "semi-open family is not closed under intersection",
      [](const SpaceView& sv, const Assignment& a) {
        SoftSet f = arg(sv, a, 0), g = arg(sv, a, 1);
        int x = *a.point;
        if (!sv.family.is_semi_nbd(x, f) || !sv.family.is_semi_nbd(x, g))
          return pass();
        if (sv.family.is_semi_nbd(x, f & g)) return pass();
        return ClaimEval{false, "F and G are semi-nbds of x = true",
                         "F & G is a semi-nbd of x = false"};
      }));

  cat.push_back(make(
      "P3.4.3", BT, IN, GN, 2, true,
      "F semi-nbd of x and F <= G imply G is a semi-nbd of x", "",
      [](const SpaceView& sv, const Assignment& a) {
        SoftSet f = arg(sv, a, 0), g = arg(sv, a, 1);
        int x = *a.point;
        if (!sv.family.is_semi_nbd(x, f) || !f.is_subset_of(g)) return pass();
        if (sv.family.is_semi_nbd(x, g)) return pass();
        return ClaimEval{false, "F is a semi-nbd of x and F <= G = true",
                         "G is a semi-nbd of x = false"};
      }));

  cat.push_back(make(
      "P3.22.1", BT, IN, GS, 1, true,
      "semi-open F with x in points(F) is in nbd-system(x)", "",
      [](const SpaceView& sv, const Assignment& a) {
        SoftSet f = arg(sv, a, 0);
        int x = *a.point;
        if (!f.has_point(x)) return pass();
        if (sv.family.contains(f) && f.has_point(x)) return pass();
        return ClaimEval{false, "x in points(F) = true",
                         "F in nbd-system(x) = false"};
      }));

  cat.push_back(make(
      "P3.22.2-sys", SU, IN, GS, 2, true,
      "F, G in nbd-system(x) imply F & G in nbd-system(x)",
      "system members are semi-open, so this needs F & G semi-open",
      [](const SpaceView& sv, const Assignment& a) {
        SoftSet f = arg(sv, a, 0), g = arg(sv, a, 1);
        int x = *a.point;
        if (!f.has_point(x) || !g.has_point(x)) return pass();
        SoftSet inter = f & g;
        if (sv.family.contains(inter) && inter.has_point(x)) return pass();
        return ClaimEval{false, "F and G are in nbd-system(x) = true",
                         "F & G in nbd-system(x) = false; F & G = " +
                             inter.to_string()};
      }));

  cat.push_back(make(
      "P3.22.2-nbd", SU, IN, GN, 2, true,
      "F, G semi-nbds of x imply F & G is a semi-nbd of x",
      "the containing-a-semi-open reading; same predicate as P3.4.2",
      [](const SpaceView& sv, const Assignment& a) {
        SoftSet f = arg(sv, a, 0), g = arg(sv, a, 1);
        int x = *a.point;
        if (!sv.family.is_semi_nbd(x, f) || !sv.family.is_semi_nbd(x, g))
          return pass();
        if (sv.family.is_semi_nbd(x, f & g)) return pass();
        return ClaimEval{false, "F and G are semi-nbds of x = true",
                         "F & G is a semi-nbd of x = false"};
      }));

  cat.push_back(make(
      "P3.22.3-sys", AM, IN, GN, 2, true,
      "F in nbd-system(x) and F <= G imply G in nbd-system(x)",
      "system members must be semi-open, and supersets of semi-open sets "
      "need not be semi-open",
      [](const SpaceView& sv, const Assignment& a) {
        SoftSet f = arg(sv, a, 0), g = arg(sv, a, 1);
        int x = *a.point;
        if (!sv.family.contains(f) || !f.has_point(x) || !f.is_subset_of(g))
          return pass();
        if (sv.family.contains(g) && g.has_point(x)) return pass();
        return ClaimEval{false, "F in nbd-system(x) and F <= G = true",
                         "G in nbd-system(x) = false; G semi-open = " +
                             std::string(bstr(sv.family.contains(g)))};
      }));

  cat.push_back(make(
      "P3.22.3-nbd", AM, IN, GN, 2, true,
      "F semi-nbd of x and F <= G imply G is a semi-nbd of x",
      "the containing-a-semi-open reading; same predicate as P3.4.3",
      [](const SpaceView& sv, const Assignment& a) {
        SoftSet f = arg(sv, a, 0), g = arg(sv, a, 1);
        int x = *a.point;
        if (!sv.family.is_semi_nbd(x, f) || !f.is_subset_of(g)) return pass();
        if (sv.family.is_semi_nbd(x, g)) return pass();
        return ClaimEval{false, "F is a semi-nbd of x and F <= G = true",
                         "G is a semi-nbd of x = false"};
      }));

  cat.push_back(make(
      "P3.22.4", SU, EX, GS, 1, true,
      "F in nbd-system(x) implies some H in nbd-system(x) has F in "
      "nbd-system(y) for every y in points(H)",
      "H = F itself is a witness whenever the premise holds",
      [](const SpaceView& sv, const Assignment& a) {
        SoftSet f = arg(sv, a, 0);
        int x = *a.point;
        if (!f.has_point(x)) return pass();
        for (const auto& h : sv.family.semi_open_sets()) {
          if (!h.has_point(x)) continue;
          if ((h.point_mask() & ~f.point_mask()) == 0) return pass();
        }
        return ClaimEval{
            false, "no H in nbd-system(x) has points(H) <= points(F)",
            "F = " + f.to_string()};
      }));

  cat.push_back(make(
      "P3.22.5-open", AM, IF, GN, 1, false,
      "F is open <=> every point of F has a semi-open nbd inside F",
      "as printed, with soft open on the left; fails already for point-free "
      "non-open sets, where the right side is vacuously true",
      [](const SpaceView& sv, const Assignment& a) {
        SoftSet f = arg(sv, a, 0);
        return iff("F is open", sv.topology.is_open(f),
                   "every point of F has a semi-open nbd inside F",
                   every_point_has_inner_nbd(sv, f));
      }));

  cat.push_back(make(
      "P3.22.5-semi", AM, IF, GN, 1, false,
      "F is semi-open <=> every point of F has a semi-open nbd inside F",
      "the proof-consistent reading with semi-open on the left; still fails "
      "for point-free sets",
      [](const SpaceView& sv, const Assignment& a) {
        SoftSet f = arg(sv, a, 0);
        return iff("F is semi-open", sv.family.contains(f),
                   "every point of F has a semi-open nbd inside F",
                   every_point_has_inner_nbd(sv, f));
      }));

  cat.push_back(make(
      "P3.24.1", SU, IN, GS, 1, true, "F in base(x) implies x in points(F)",
      "the canonical base at x is the full nbd-system(x)",
      [](const SpaceView& sv, const Assignment& a) {
        SoftSet f = arg(sv, a, 0);
        int x = *a.point;
        if (!f.has_point(x)) return pass();
        if (f.has_point(x)) return pass();
        return ClaimEval{false, "F in base(x) = true", "x in points(F) = false"};
      }));

  cat.push_back(make(
      "P3.24.2", SU, EX, GS, 2, true,
      "F, G in base(x) imply some H in base(x) has H <= F & G",
      "fails with the canonical base on spaces whose semi-open family is "
      "not closed under intersection",
      [](const SpaceView& sv, const Assignment& a) {
        SoftSet f = arg(sv, a, 0), g = arg(sv, a, 1);
        int x = *a.point;
        if (!f.has_point(x) || !g.has_point(x)) return pass();
        if (sv.family.is_semi_nbd(x, f & g)) return pass();
        return ClaimEval{false, "F and G are in base(x) = true",
                         "no H in base(x) is inside F & G; F & G = " +
                             (f & g).to_string()};
      }));

  cat.push_back(make(
      "P3.24.3", SU, EX, GS, 1, true,
      "F in base(x) implies some H in base(x) has, for every z in points(H), "
      "some I in base(z) with I <= F",
      "H = F and I = F witness the claim whenever the premise holds",
      [](const SpaceView& sv, const Assignment& a) {
        SoftSet f = arg(sv, a, 0);
        int x = *a.point;
        if (!f.has_point(x)) return pass();
        for (const auto& h : sv.family.semi_open_sets()) {
          if (!h.has_point(x)) continue;
          bool all = true;
          for (int z = 0; z < sv.context()->universe_size() && all; ++z) {
            if (!h.has_point(z)) continue;
            all = sv.family.is_semi_nbd(z, f);
          }
          if (all) return pass();
        }
        return ClaimEval{false, "no H in base(x) works", "F = " + f.to_string()};
      }));

  cat.push_back(make(
      "P3.24.4", SU, IF, GN, 1, false,
      "F is semi-open <=> every point of F has a base member inside F",
      "with the canonical base this is the semi-open variant of P3.22.5; "
      "fails for point-free sets that are not semi-open",
      [](const SpaceView& sv, const Assignment& a) {
        SoftSet f = arg(sv, a, 0);
        return iff("F is semi-open", sv.family.contains(f),
                   "every point of F has a base member inside F",
                   every_point_has_inner_nbd(sv, f));
      }));

  return cat;
}

}  // namespace

const std::vector<Claim>& catalog() {
  static const std::vector<Claim> cat = build_catalog();
  return cat;
}

}  // namespace softtop
