#include "corpus.hpp"

namespace xmodcat::corpus {

namespace {

GroupHom hom(const FiniteGroup& s, const FiniteGroup& t, std::vector<int> map) {
  return make_hom(s, t, std::move(map));
}

}  // namespace

XPtr trivial_x() {
  FiniteGroup e = trivial_group();
  return make_xptr(crossed_module(e, e, trivial_action(e, 1), hom(e, e, {0})));
}

XPtr d_z2() { return make_xptr(drinfeld_double(cyclic_group(2))); }
XPtr d_z3() { return make_xptr(drinfeld_double(cyclic_group(3))); }
XPtr d_z4() { return make_xptr(drinfeld_double(cyclic_group(4))); }
XPtr d_s3() { return make_xptr(drinfeld_double(symmetric_group_s3())); }

XPtr x4_double_cover() {
  FiniteGroup z4 = cyclic_group(4);
  return make_xptr(crossed_module(z4, z4, trivial_action(z4, 4),
                                  hom(z4, z4, {0, 2, 0, 2})));
}

XPtr trivial_boundary_z2() {
  FiniteGroup e = trivial_group();
  FiniteGroup z2 = cyclic_group(2);
  return make_xptr(crossed_module(e, z2, trivial_action(e, 2), hom(z2, e, {0, 0})));
}

XPtr trivial_boundary_z2_z2() {
  FiniteGroup z2 = cyclic_group(2);
  return make_xptr(
      crossed_module(z2, z2, trivial_action(z2, 2), hom(z2, z2, {0, 0})));
}

XPtr inv_z3() {
  FiniteGroup z2 = cyclic_group(2);
  FiniteGroup z3 = cyclic_group(3);
  GroupAction negate = make_action(z2, 3, {{0, 1, 2}, {0, 2, 1}});
  return make_xptr(crossed_module(z2, z3, std::move(negate), hom(z3, z2, {0, 0, 0})));
}

XPtr d_d4() {
  FiniteGroup z4 = cyclic_group(4);
  FiniteGroup z2 = cyclic_group(2);
  GroupAction invert = make_action(z2, 4, {{0, 1, 2, 3}, {0, 3, 2, 1}});
  return make_xptr(drinfeld_double(semidirect_product(z4, z2, invert)));
}

std::vector<std::pair<std::string, XPtr>> all_valid() {
  return {{"trivial", trivial_x()},
          {"d_z2", d_z2()},
          {"d_z3", d_z3()},
          {"d_z4", d_z4()},
          {"d_s3", d_s3()},
          {"x4_double_cover", x4_double_cover()},
          {"trivial_boundary_z2", trivial_boundary_z2()},
          {"trivial_boundary_z2_z2", trivial_boundary_z2_z2()},
          {"inv_z3", inv_z3()},
          {"d_d4", d_d4()}};
}

RawParts peiffer_violation_parts() {
  RawParts p;
  p.x1 = cyclic_group(2);
  p.x2 = cyclic_group(4);
  p.mu = make_action(p.x1, 4, {{0, 1, 2, 3}, {0, 3, 2, 1}});
  p.boundary = hom(p.x2, p.x1, {0, 1, 0, 1});
  return p;
}

}  // namespace xmodcat::corpus
