#pragma once

// Sequence-level laws of epr-sequences of real symmetric matrices, exposed
// as executable validators. validate_forbidden returns every rule the given
// word breaks; a sequence computed from an actual symmetric matrix must
// come back clean.

#include <string>
#include <string_view>
#include <vector>

#include "eprlab/epr.hpp"
#include "eprlab/pattern.hpp"

namespace eprlab {

struct ViolationReport {
    std::string rule;
    int position = 0; // 1-based index of the first offending letter
    std::string detail;
};

namespace rule {
inline constexpr std::string_view kNnTheorem = "NN_THEOREM";
inline constexpr std::string_view kTripleNsa = "TRIPLE_NSA";
inline constexpr std::string_view kTripleNan = "TRIPLE_NAN";
inline constexpr std::string_view kTripleNas = "TRIPLE_NAS";
inline constexpr std::string_view kAsnThenA = "ASN_THEN_A";
inline constexpr std::string_view kAnaForm = "ANA_FORM";
inline constexpr std::string_view kSnaPrefix = "SNA_PREFIX";
inline constexpr std::string_view kTerminalS = "TERMINAL_S";
} // namespace rule

/// Checks: NN forces N forever after; the consecutive triples NSA, NAN and
/// NAS never occur; ASN is never followed by a later A; an interior ANA
/// forces the whole sequence into the form (A)*ANAA(A)*; SNA never occurs
/// within the first n-2 letters; no sequence ends with S. Rules that need
/// more letters than the sequence has are vacuously satisfied.
inline std::vector<ViolationReport> validate_forbidden(const EprSequence& seq) {
    const std::string& w = seq.letters;
    const int n = seq.size();
    std::vector<ViolationReport> out;

    // NN followed by anything other than N
    for (int k = 0; k + 1 < n; ++k) {
        if (w[static_cast<std::size_t>(k)] == 'N' && w[static_cast<std::size_t>(k + 1)] == 'N') {
            for (int j = k + 2; j < n; ++j) {
                if (w[static_cast<std::size_t>(j)] != 'N') {
                    out.push_back({std::string(rule::kNnTheorem), j + 1,
                                   "letter " + std::to_string(j + 1) + " is '" +
                                       w[static_cast<std::size_t>(j)] +
                                       "' after NN at positions " + std::to_string(k + 1) +
                                       "," + std::to_string(k + 2)});
                    break;
                }
            }
            break;
        }
    }

    auto scan_triple = [&](std::string_view triple, std::string_view name) {
        for (int k = 0; k + 2 < n; ++k)
            if (w.compare(static_cast<std::size_t>(k), 3, triple) == 0) {
                out.push_back({std::string(name), k + 1,
                               std::string(triple) + " at positions " +
                                   std::to_string(k + 1) + ".." + std::to_string(k + 3)});
                return;
            }
    };
    scan_triple("NSA", rule::kTripleNsa);
    scan_triple("NAN", rule::kTripleNan);
    scan_triple("NAS", rule::kTripleNas);

    // ASN at positions k..k+2 bans 'A' at every position >= k+3
    for (int k = 0; k + 2 < n; ++k) {
        if (w.compare(static_cast<std::size_t>(k), 3, "ASN") == 0) {
            bool reported = false;
            for (int j = k + 3; j < n; ++j)
                if (w[static_cast<std::size_t>(j)] == 'A') {
                    out.push_back({std::string(rule::kAsnThenA), j + 1,
                                   "A at position " + std::to_string(j + 1) +
                                       " after ASN at " + std::to_string(k + 1)});
                    reported = true;
                    break;
                }
            if (reported) break;
        }
    }

    // ANA within the first n-1 letters forces the form (A)*ANAA(A)*
    for (int k = 0; k + 2 < n - 1; ++k) {
        if (w.compare(static_cast<std::size_t>(k), 3, "ANA") == 0) {
            if (!matches(w, "(A)*ANAA(A)*"))
                out.push_back({std::string(rule::kAnaForm), k + 1,
                               "ANA at position " + std::to_string(k + 1) +
                                   " but sequence is not of the form (A)*ANAA(A)*"});
            break;
        }
    }

    // SNA fully inside the first n-2 letters
    for (int k = 0; k + 2 < n - 2; ++k) {
        if (w.compare(static_cast<std::size_t>(k), 3, "SNA") == 0) {
            out.push_back({std::string(rule::kSnaPrefix), k + 1,
                           "SNA at positions " + std::to_string(k + 1) + ".." +
                               std::to_string(k + 3) + " within the first n-2 letters"});
            break;
        }
    }

    if (n >= 1 && w.back() == 'S')
        out.push_back({std::string(rule::kTerminalS), n, "sequence ends with S"});

    return out;
}

/// The complete list of epr-sequences that start with AN and whose fourth
/// letter is not S, named by their shapes.
enum class AnStartForm {
    None,
    An_N,        // AN(N)*
    Ana_A,       // ANA(A)*
    AnsnSn_N,    // ANSN(SN)*(N)*
    AnsnSnA,     // ANSN(SN)*A
    Ansnaa,      // ANSNAA
    Ansnssn_N,   // ANSNSSN(N)*
};

inline std::string_view an_start_form_pattern(AnStartForm f) {
    switch (f) {
        case AnStartForm::An_N: return "AN(N)*";
        case AnStartForm::Ana_A: return "ANA(A)*";
        case AnStartForm::AnsnSn_N: return "ANSN(SN)*(N)*";
        case AnStartForm::AnsnSnA: return "ANSN(SN)*A";
        case AnStartForm::Ansnaa: return "ANSNAA";
        case AnStartForm::Ansnssn_N: return "ANSNSSN(N)*";
        case AnStartForm::None: return "NONE";
    }
    return "NONE";
}

/// Which of the six admissible forms the sequence matches, or None. The
/// forms are mutually exclusive; matching is literal, nothing is inferred.
inline AnStartForm classify_an_start(const EprSequence& seq) {
    const std::string& w = seq.letters;
    if (seq.size() < 2 || w[0] != 'A' || w[1] != 'N')
        throw PreconditionError("classify_an_start: sequence must start with AN");
    if (seq.size() >= 4 && w[3] == 'S')
        throw PreconditionError("classify_an_start: fourth letter must not be S");
    static const AnStartForm kForms[] = {
        AnStartForm::An_N,     AnStartForm::Ana_A,  AnStartForm::AnsnSn_N,
        AnStartForm::AnsnSnA,  AnStartForm::Ansnaa, AnStartForm::Ansnssn_N,
    };
    for (AnStartForm f : kForms)
        if (matches(w, an_start_form_pattern(f))) return f;
    return AnStartForm::None;
}

/// The admissible shapes of the GF(2) epr-sequence of a symmetric 0-1
/// matrix ending with NAA over the rationals.
enum class Epr2NaaForm {
    None,     // reaching this is a theorem violation
    NsNan,    // (NS)*NAN
    NsNnn_N,  // (NS)*NNN(N)*
    A_S_Nnn,  // A(S)*NNN(N)*
    S_S_Nnn,  // S(S)*NNN(N)*
};

inline std::string_view epr2_naa_form_pattern(Epr2NaaForm f) {
    switch (f) {
        case Epr2NaaForm::NsNan: return "(NS)*NAN";
        case Epr2NaaForm::NsNnn_N: return "(NS)*NNN(N)*";
        case Epr2NaaForm::A_S_Nnn: return "A(S)*NNN(N)*";
        case Epr2NaaForm::S_S_Nnn: return "S(S)*NNN(N)*";
        case Epr2NaaForm::None: return "NONE";
    }
    return "NONE";
}

inline Epr2NaaForm classify_epr2_naa(const EprSequence& seq2) {
    static const Epr2NaaForm kForms[] = {
        Epr2NaaForm::NsNan,
        Epr2NaaForm::NsNnn_N,
        Epr2NaaForm::A_S_Nnn,
        Epr2NaaForm::S_S_Nnn,
    };
    for (Epr2NaaForm f : kForms)
        if (matches(seq2.letters, epr2_naa_form_pattern(f))) return f;
    return Epr2NaaForm::None;
}

/// Computes epr2(m) and classifies it. Precondition: m is symmetric 0-1 and
/// its epr-sequence over the rationals ends with NAA.
inline Epr2NaaForm epr2_form_for_naa(const IntMatrix& m) {
    if (m.order() < 3)
        throw PreconditionError("epr2_form_for_naa: order must be >= 3");
    const EprSequence seq = epr(m);
    if (seq.letters.compare(static_cast<std::size_t>(seq.size() - 3), 3, "NAA") != 0)
        throw PreconditionError("epr2_form_for_naa: matrix does not end with NAA");
    return classify_epr2_naa(epr2(m));
}

} // namespace eprlab
