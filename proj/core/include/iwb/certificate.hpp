// Bounded certificates for the four interpretability notions:
//   a   every V-axiom of code <= x has a U-proof of its translation
//   sa  as a, and the largest witness code y is reported
//   t   every supplied V-proof of φ comes with a U-proof of φ^k
//   st  as t, with the largest witness code reported
// A certificate also carries U-proofs of the translated equality
// obligations, which translated V-proofs rely on.
//
// On disk a certificate is a directory: manifest.json, translation.sexp,
// source.theory, target.theory and one file per proof.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "iwb/interp.hpp"
#include "iwb/theory.hpp"

namespace iwb {

enum class Notion : std::uint8_t { A, SA, T, ST };

std::string_view notion_name(Notion n);
Notion notion_from_name(std::string_view s);

struct TheoremPair {
  Proof source;   // V-proof, closed
  Proof witness;  // U-proof of the translated conclusion
};

struct InterpretationCertificate {
  Translation k;
  TheorySpec V;
  TheorySpec U;
  Code x = 0;                                 // axioms of V up to this code are covered
  std::map<Code, Proof> axioms;               // V-axiom code -> U-proof of its translation
  std::map<std::string, Proof> equality;      // obligation label -> U-proof
  std::vector<TheoremPair> theorems;
};

struct CertificateReport {
  Notion notion = Notion::A;
  bool ok = true;
  Code x = 0;            // coverage bound certified (a, sa)
  Code y = 0;            // largest witness code (sa, st)
  std::size_t witnesses = 0;
  std::vector<std::string> failures;
  std::optional<Code> failed_axiom;
  std::string text() const;
};

CertificateReport verify_certificate(const InterpretationCertificate& c, Notion notion);

/// Replaces open assumptions by proofs, keyed by label.
Proof plug(const Proof& p, const std::map<std::string, Proof>& by_label);

/// The U-proof of φ^k obtained from a V-proof of φ by translating it and
/// plugging in the certificate's axiom and equality witnesses.
Proof theorem_witness(const InterpretationCertificate& c, const Proof& v_proof);

/// Proof of an equality obligation by logic alone, when k maps identity to
/// identity; nullopt for eq:nonempty or when identity is not preserved.
std::optional<Proof> logical_equality_witness(const Translation& k, const std::string& label);

void write_certificate(const std::string& dir, const InterpretationCertificate& c);
InterpretationCertificate read_certificate(const std::string& dir);

}  // namespace iwb
