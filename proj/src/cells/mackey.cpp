#include "roq/cells/mackey.hpp"

#include "roq/util/errors.hpp"

namespace roq {

void MackeyQ::validate() const {
    if (res.rows() != bottom_rank || res.cols() != top_rank) throw RoqError("MackeyQ: res has the wrong shape");
    if (ind.rows() != top_rank || ind.cols() != bottom_rank) throw RoqError("MackeyQ: ind has the wrong shape");
    if (weyl.rows() != bottom_rank || weyl.cols() != bottom_rank) throw RoqError("MackeyQ: weyl has the wrong shape");
    IntMatrix id = IntMatrix::identity(bottom_rank);
    if (!(weyl * weyl == id)) throw RoqError("MackeyQ: weyl is not an involution");
    if (!(weyl * res == res)) throw RoqError("MackeyQ: restriction does not land in the invariants");
    if (!(ind * weyl == ind)) throw RoqError("MackeyQ: induction does not factor through the coinvariants");
    if (!(res * ind == id + weyl)) throw RoqError("MackeyQ: double coset formula res∘ind = 1 + weyl fails");
}

MackeyQ MackeyQ::constant_z() {
    return MackeyQ{1, 1, IntMatrix{{1}}, IntMatrix{{2}}, IntMatrix{{1}}};
}

}  // namespace roq
