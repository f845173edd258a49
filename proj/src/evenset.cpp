#include "evensets/evenset.hpp"

#include <algorithm>

namespace evensets {

DivClass half_class(const DivClass& c) { return c.half(); }

EvenSetReport verify_even_set(const SurfaceLattice& lat, std::vector<DivClass> curves) {
    if (curves.empty()) fail("BadInput", "empty curve list");
    for (std::size_t i = 0; i < curves.size(); ++i)
        if (curves[i].rank() != lat.rank())
            fail("BadInput", "curve " + std::to_string(i) + " has wrong rank");

    for (std::size_t i = 0; i < curves.size(); ++i)
        for (std::size_t j = i + 1; j < curves.size(); ++j)
            if (curves[i] == curves[j])
                fail("DuplicateCurve",
                     "curves " + std::to_string(i) + " and " + std::to_string(j) + " coincide");

    for (std::size_t i = 0; i < curves.size(); ++i)
        if (!lat.is_neg_r_class(curves[i], 4))
            fail("NotMinus4", "curve " + std::to_string(i) + " has square " +
                                  lat.self(curves[i]).str() + " and genus " +
                                  lat.arithmetic_genus(curves[i]).str());

    for (std::size_t i = 0; i < curves.size(); ++i)
        for (std::size_t j = i + 1; j < curves.size(); ++j) {
            Int p = lat.pair(curves[i], curves[j]);
            if (p != 0)
                fail("NotDisjoint", "curves " + std::to_string(i) + " and " + std::to_string(j) +
                                        " meet with multiplicity " + p.str());
        }

    DivClass sum = DivClass::zero(lat.rank());
    for (const auto& c : curves) sum = sum + c;
    std::size_t odd = sum.first_odd();
    if (odd != sum.rank())
        fail("NotTwoDivisible", "coordinate " + std::to_string(odd) + " (" +
                                    lat.basis_name(odd) + ") of the sum is odd");

    EvenSetReport rep{lat, std::move(curves), 0, sum, sum.half(), lat.canonical_square(), false, {}};
    rep.n = rep.curves.size();

    const Int n = Int(rep.n);
    const DivClass& L = rep.half;
    const DivClass K = lat.canonical();
    rep.half_is_anticanonical = (L == -K);

    rep.identities.push_back({"L.L = -n", lat.self(L), -n, false});
    rep.identities.push_back({"K.L = n", lat.pair(K, L), n, false});
    rep.identities.push_back({"(K+L)^2 = K.K + n", lat.self(K + L), rep.kx2 + n, false});
    for (auto& idc : rep.identities) {
        idc.pass = (idc.lhs == idc.rhs);
        if (!idc.pass)
            fail("IdentityViolation", idc.name + " fails: " + idc.lhs.str() + " vs " +
                                          idc.rhs.str());
    }
    return rep;
}

NefReduction nef_reduction(const EvenSetReport& report, std::vector<DivClass> declared) {
    for (std::size_t i = 0; i < declared.size(); ++i) {
        if (declared[i].rank() != report.lattice.rank())
            fail("BadInput", "declared class " + std::to_string(i) + " has wrong rank");
        if (!report.lattice.is_neg_r_class(declared[i], 1))
            fail("BadInput", "declared class " + std::to_string(i) +
                                 " is not a (-1)-class of genus 0");
    }

    NefReduction out{report, {}, {}};
    bool progress = true;
    while (progress) {
        progress = false;
        const SurfaceLattice& lat = out.report.lattice;
        for (std::size_t i = 0; i < declared.size(); ++i) {
            bool orthogonal = true;
            for (const auto& c : out.report.curves)
                if (lat.pair(declared[i], c) != 0) { orthogonal = false; break; }
            if (!orthogonal) continue;

            std::size_t j = lat.as_basis_exceptional(declared[i]);
            if (j == 0) {
                std::string name = pretty(lat, declared[i]);
                if (std::find(out.non_basis.begin(), out.non_basis.end(), name) ==
                    out.non_basis.end())
                    out.non_basis.push_back(name);
                continue;
            }

            BlowDown bd = blow_down_basis(lat, j);
            out.contracted.push_back(lat.basis_name(lat.exceptional_slot(j)));

            std::vector<DivClass> curves;
            curves.reserve(out.report.curves.size());
            for (const auto& c : out.report.curves) curves.push_back(bd.push(c));

            std::vector<DivClass> next_declared;
            for (std::size_t t = 0; t < declared.size(); ++t) {
                if (t == i) continue;
                DivClass img = bd.push(declared[t]);
                if (bd.to.is_neg_r_class(img, 1)) next_declared.push_back(img);
            }
            declared = std::move(next_declared);
            out.report = verify_even_set(bd.to, std::move(curves));
            progress = true;
            break;
        }
    }
    return out;
}

} // namespace evensets
