#include "wavekit/recognition.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "wavekit/error.hpp"
#include "wavekit/reduction.hpp"

namespace wavekit {

int FillingHomology::rank() const { return int(std::count(factors.begin(), factors.end(), 0L)); }

long FillingHomology::order() const { return rank() > 0 ? 0 : torsion_order(); }

long FillingHomology::torsion_order() const {
  long p = 1;
  for (long f : factors)
    if (f != 0) p *= f;
  return p;
}

std::string FillingHomology::str() const {
  std::vector<std::string> parts;
  const int r = rank();
  if (r == 1) parts.push_back("Z");
  if (r > 1) parts.push_back("Z^" + std::to_string(r));
  for (long f : factors)
    if (f != 0) parts.push_back("Z/" + std::to_string(f));
  if (parts.empty()) return "0";
  std::string s = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) s += " + " + parts[i];
  return s;
}

std::vector<long> smith_diagonal(std::vector<std::vector<long>> m, std::size_t cols) {
  const std::size_t rows = m.size();
  for (auto& r : m) r.resize(cols, 0);
  const std::size_t k = std::min(rows, cols);
  for (std::size_t t = 0; t < k; ++t) {
    for (;;) {
      // Bring the smallest nonzero entry of the remaining block to (t, t).
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (m[i][j] != 0 && (pi == rows || std::labs(m[i][j]) < std::labs(m[pi][pj]))) pi = i, pj = j;
      if (pi == rows) break;
      std::swap(m[t], m[pi]);
      for (auto& r : m) std::swap(r[t], r[pj]);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        const long q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        clean = clean && m[i][t] == 0;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        const long q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        clean = clean && m[t][j] == 0;
      }
      if (!clean) continue;
      // Divisibility: fold any entry not divisible by the pivot into row t.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols && divides; ++j)
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t c = t; c < cols; ++c) m[t][c] += m[i][c];
            divides = false;
          }
      if (divides) break;
    }
  }
  std::vector<long> diag(k);
  for (std::size_t t = 0; t < k; ++t) diag[t] = std::labs(m[t][t]);
  // Zeros sort last so each entry divides the next.
  std::stable_partition(diag.begin(), diag.end(), [](long x) { return x != 0; });
  return diag;
}

FillingHomology homology_of_relators(const std::vector<CyclicWord>& relators) {
  std::vector<std::vector<long>> rows;
  for (const auto& w : relators) {
    AbelianImage a = abelianize(w);
    rows.push_back({long(a.a), long(a.b)});
  }
  std::vector<long> diag = smith_diagonal(rows, 2);
  diag.resize(2, 0);
  FillingHomology h;
  for (long d : diag)
    if (d != 1) h.factors.push_back(d);
  return h;
}

FillingHomology homology_of_filling(const CyclicWord& w1, const CyclicWord& w2) {
  return homology_of_relators({w1, w2});
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::S3: return "S3";
    case Verdict::S1xS2: return "S1xS2";
    case Verdict::S1xS2_connect_sum_Lp: return "S1xS2#L(p,q)";
    case Verdict::NotInFamily: return "NotInFamily";
    case Verdict::NoWaveFound: return "NoWaveFound";
    case Verdict::DoesNotEmbed: return "DoesNotEmbed";
  }
  return "?";
}

static std::string describe_verdict(Verdict v, long p, const std::string& reason) {
  std::string s = verdict_name(v);
  if (v == Verdict::S1xS2_connect_sum_Lp) s += " p=" + std::to_string(p);
  if (!reason.empty()) s += " (" + reason + ")";
  return s;
}

std::string RecognitionResult::describe() const { return describe_verdict(verdict, p, reason); }

std::string FamilyResult::describe() const { return describe_verdict(verdict, p, recognition.reason); }

namespace {

bool in_family(Verdict v) {
  return v == Verdict::S3 || v == Verdict::S1xS2 || v == Verdict::S1xS2_connect_sum_Lp;
}

RecognitionResult verdict_from_homology(const FillingHomology& h) {
  RecognitionResult r;
  const int rank = h.rank();
  const long tor = h.torsion_order();
  const std::size_t finite = h.factors.size() - std::size_t(rank);
  if (h.trivial()) {
    r.verdict = Verdict::S3;
  } else if (rank == 1 && finite == 0) {
    r.verdict = Verdict::S1xS2;
  } else if (rank == 1 && finite == 1) {
    r.verdict = Verdict::S1xS2_connect_sum_Lp;
    r.p = tor;
  } else {
    r.verdict = Verdict::NotInFamily;
    r.reason = "homology " + h.str();
  }
  return r;
}

// Embedding of `words` for the next step: the diagram in hand when the basis
// did not change, otherwise a fresh search.
EmbeddedDiagram carry_or_embed(const EmbeddedDiagram& d, const std::vector<CyclicWord>& words, bool changed) {
  if (!changed) return d;
  return embed_curves(words);
}

}  // namespace

RecognitionResult recognize_closed(const EmbeddedDiagram& input) {
  if (input.curves.size() != 2) throw Error("InputInvalid", "expected a diagram of two curves");
  validate(input);
  for (const auto& c : input.curves)
    if (reduce(c).empty()) throw Error("InputInvalid", "a curve bounds a disk");
  if (canonical_form(input.curves[0]) == canonical_form(input.curves[1]))
    throw Error("InputInvalid", "curves are parallel");

  RecognitionResult out;
  Trace total;  // input basis -> current basis
  EmbeddedDiagram d = input;
  const FillingHomology h0 = homology_of_relators(d.curves);
  auto record = [&](const std::vector<CyclicWord>& ws) {
    const Trace back = inverse_trace(total);
    out.trace.push_back(canonical_pair(apply_trace(ws[0], back), apply_trace(ws[1], back)));
  };
  auto finish = [&](RecognitionResult r) {
    r.trace = std::move(out.trace);
    return r;
  };

  constexpr int kMaxIterations = 10000;
  for (int iter = 0; iter < kMaxIterations; ++iter) {
    std::vector<CyclicWord> R = {reduce(d.curves[0]), reduce(d.curves[1])};
    record(R);
    if (homology_of_relators(R) != h0) throw InternalError("recognition changed the filling homology");

    // Primitive or proper-power shortcut.
    if (is_primitive_or_power(R[0]) || is_primitive_or_power(R[1])) return finish(verdict_from_homology(h0));

    // Minimal diagram of the pair.
    JointMinimizeResult jm = joint_minimize(R);
    if (!is_eligible(graph_of_words(jm.minimal))) {
      out.verdict = Verdict::NotInFamily;
      out.reason = "NoEligibleDiagram";
      return finish(out);
    }
    total.insert(total.end(), jm.trace.begin(), jm.trace.end());
    EmbeddedDiagram D = carry_or_embed(d, jm.minimal, jm.minimal != R);

    // The shortest member is the one a wave is not based at.
    const int shortest = shortest_member(D);
    if (shortest < 0) {
      out.verdict = Verdict::NoWaveFound;
      out.reason = "no wave";
      return finish(out);
    }
    const int partner = 1 - shortest;

    // Eligible diagram of the shortest member alone, carried to the pair.
    OrbitEntry rep;
    try {
      rep = distinguished_representative(D.curves[shortest]);
    } catch (const Error& e) {
      if (e.code() != "BoundaryCompressible") throw;
      out.verdict = Verdict::NotInFamily;
      out.reason = "NoEligibleDiagram";
      return finish(out);
    }
    std::vector<CyclicWord> R2(2);
    R2[shortest] = rep.word;
    R2[partner] = apply_trace(D.curves[partner], rep.trace);
    total.insert(total.end(), rep.trace.begin(), rep.trace.end());
    EmbeddedDiagram D2 = carry_or_embed(D, R2, !rep.trace.empty() || D.curves[shortest] != rep.word);

    EmbeddedDiagram single = restrict_curves(D2, {shortest});
    Wave wave = distinguished_wave(single);
    Wave lifted = wave;
    lifted.base_curve = shortest;
    lifted.end1.curve = lifted.end2.curve = shortest;
    if (signed_intersection(D2, partner, lifted) != 0) {
      out.verdict = Verdict::NotInFamily;
      out.reason = "wave intersection";
      return finish(out);
    }

    SurgeryResult s = cut_along(single, wave);
    const std::size_t before = R2[0].size() + R2[1].size();
    if (s.m1.size() + s.m2.size() >= before) throw InternalError("recognition did not reduce complexity");
    d = s.diagram;
  }
  throw InternalError("recognition exceeded the iteration cap");
}

RecognitionResult recognize_words(const CyclicWord& w1, const CyclicWord& w2) {
  CyclicWord x = reduce(w1), y = reduce(w2);
  if (x.empty() || y.empty()) throw Error("InputInvalid", "a curve bounds a disk");
  return recognize_closed(embed_curves({x, y}));
}

FamilyResult embeds_in_family(const CyclicWord& w) {
  FamilyResult f;
  f.pair = distinguished_meridian_pair(w);
  const EmbeddedDiagram* target = &f.pair.pair_diagram;
  EmbeddedDiagram fallback;
  if (f.pair.m1 == f.pair.m2) {
    // Parallel meridians: fill the knot exterior along one of them instead.
    SurgeryResult s = cut_along_keeping_base(f.pair.diagram, f.pair.wave);
    fallback = restrict_curves(s.diagram, {0, 1});
    target = &fallback;
  }
  f.recognition = recognize_closed(*target);
  const Trace back = inverse_trace(f.pair.trace);
  for (auto& step : f.recognition.trace)
    step = canonical_pair(apply_trace(step.first, back), apply_trace(step.second, back));
  if (in_family(f.recognition.verdict)) {
    f.verdict = f.recognition.verdict;
    f.p = f.recognition.p;
  } else {
    f.verdict = Verdict::DoesNotEmbed;
  }
  return f;
}

bool is_11_tunnel(const CyclicWord& w) {
  FamilyResult f = embeds_in_family(w);
  if (f.verdict != Verdict::S3 && f.verdict != Verdict::S1xS2)
    throw Error("NotAKnotExteriorInS3orS1xS2", to_string(reduce(w)) + ": " + f.describe());
  return cmz_is_primitive(f.pair.m1) || cmz_is_primitive(f.pair.m2);
}

ConstituentReport canonical_constituents(const CyclicWord& w) {
  ConstituentReport r;
  r.family = embeds_in_family(w);
  if (r.family.verdict == Verdict::DoesNotEmbed)
    throw Error("NotInFamily", to_string(reduce(w)) + ": " + r.family.describe());
  const CyclicWord base = reduce(w);
  const CyclicWord* ms[2] = {&r.family.pair.m1, &r.family.pair.m2};
  for (int i = 0; i < 2; ++i) {
    r.constituents[i].word = *ms[i];
    r.constituents[i].primitive = cmz_is_primitive(*ms[i]);
    r.constituents[i].homology = homology_of_filling(base, *ms[i]);
  }
  const bool knot = r.family.verdict == Verdict::S3 || r.family.verdict == Verdict::S1xS2;
  r.is_11 = knot && (r.constituents[0].primitive || r.constituents[1].primitive);
  return r;
}

}  // namespace wavekit
