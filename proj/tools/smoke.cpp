#include "rootsys.hpp"
#include "polytope.hpp"
#include "quadrature.hpp"
#include "criterion.hpp"
#include <cstdio>
using namespace mpl;
int main() {
  auto rs = RootSystem::preset("A1xA1");
  std::printf("rho=(%s,%s) |W|=%zu\n", rat_str(rs->rho().x).c_str(), rat_str(rs->rho().y).c_str(), rs->weyl().size());
  GroupPolytope p = GroupPolytope::from_chamber_facets(rs, {{IVec2{1,0}, std::nullopt}});
  auto cell = p.cell_polygon();
  std::printf("vol=%s\n", rat_str(weighted_volume(cell, *rs)).c_str());
  auto b = barycenter(cell, *rs);
  std::printf("bar=(%s,%s)\n", rat_str(b.x).c_str(), rat_str(b.y).c_str());
  auto kev = ke_test(p);
  std::printf("ke=%d destab=%s multiple=%s\n", (int)kev.exists, rat_str(destabilizer_L(p,0)).c_str(), p.multiple().str().c_str());
  GroupPolytope t2 = GroupPolytope::from_chamber_facets(rs, {{IVec2{2,1}, std::nullopt},{IVec2{1,1}, std::nullopt}});
  std::printf("t2 vol=%s p0=%lld fine=%d\n", rat_str(weighted_volume(t2.cell_polygon(), *rs)).c_str(), (long long)t2.p_zero(), (int)t2.is_fine());
  return 0;
}
