#include "qframe/representations.hpp"

#include <algorithm>

namespace qframe {

const std::vector<std::string>& representation_names() {
    static const std::vector<std::string> names{"wootters", "ghw",  "cohendet", "leonhardt", "stratonovich",
                                                "ruzzi",    "mub",  "hardy",    "havel",     "sic"};
    return names;
}

bool is_representation_name(const std::string& name) {
    const auto& n = representation_names();
    return std::find(n.begin(), n.end(), name) != n.end();
}

Representation build_representation(const std::string& name, const BuildParams& bp) {
    if (!is_representation_name(name)) throw Error(ErrorKind::invalid_input, "unknown representation '" + name + "'");
    const int d = bp.d;
    if (name == "wootters") return bp.dims.size() > 1 ? wootters_composite(bp.dims) : wootters(bp.dims.size() == 1 ? bp.dims[0] : d);
    if (name == "ghw") {
        const int p = bp.p ? bp.p : d;
        if (!is_prime(p)) throw Error(ErrorKind::unsupported_dimension, "ghw: p must be prime");
        return ghw_field(p, bp.n).rep;
    }
    if (name == "cohendet") return cohendet(d);
    if (name == "leonhardt") return leonhardt(d);
    if (name == "stratonovich") {
        const double s = d ? (d - 1) / 2.0 : bp.spin;
        if (bp.constellation == "tetrahedral") {
            if (std::abs(s - 0.5) > 1e-12) throw Error(ErrorKind::invalid_input, "tetrahedral constellation is for spin 1/2");
            return stratonovich_discrete(s, tetrahedral_constellation());
        }
        if (bp.constellation != "random") throw Error(ErrorKind::invalid_input, "constellation must be random or tetrahedral");
        return stratonovich_discrete(s, random_constellation(s, bp.seed));
    }
    if (name == "ruzzi") return ruzzi_s0(d);
    if (name == "mub") return mub_rep(d);
    if (name == "hardy") return hardy_rep(d);
    if (name == "havel") {
        int n = bp.n;
        if (d) {
            n = 0;
            while ((1 << n) < d) ++n;
            if ((1 << n) != d) throw Error(ErrorKind::unsupported_dimension, "havel needs d = 2^n");
        }
        return havel_rep(n);
    }
    return sic_rep(sic_fiducial(d));
}

}  // namespace qframe
