// Embedded copy of data/groups.dat; regenerate with tools/gen_catalog.py.
#include "rackcheck/catalog.hpp"

namespace rackcheck {

const char* embedded_group_data() {
  return R"GRPDATA(
name M11
degree 11
order 7920
gen (1,6)(2,8,7,9,5,11,3,4)
gen (1,5,7,9,8,10,4,6,11,2,3)

name M12
degree 12
order 95040
gen (1,6)(2,7,10,9,3,4,11,5)
gen (1,10,6,4,9,12)(2,5,11)(7,8)

name M22
degree 22
order 443520
gen (1,3)(2,19,9,13)(4,18,8,17)(5,11,7,6)(10,14,20,16)(15,21)
gen (1,10,17,4,9,7,15)(2,11,16,12,13,14,5)(3,6,19,21,8,20,22)

name J2
degree 100
order 604800
gen (1,15,94,60,23)(2,56,42,61,14)(3,46,85,80,54)(4,55,41,86,83)(5,21,29,71,84)(6,96,38,66,18)(7,30,87,37,17)(8,74,16,33,11)(9,57,53,75,24)(10,90,100,62,27)(12,93,51,45,47)(13,67,39,31,59)(19,40,76,34,73)(20,36,89,91,25)(22,72,97,64,44)(26,48,81,35,43)(28,78,68,70,95)(32,58,92,63,88)(49,77,79,50,52)(65,99,98,82,69)
gen (1,90,12,6,58)(2,98,45,63,9,17,76,100,88,8)(3,93,50,44,56,23,94,75,85,67)(4,27,38,25,96,22,28,77,31,55)(5,30,73,89,46)(7,92,52,32,70,20,91,97,14,39)(10,18,36,35,99)(11,53,24,87,74,29,83,13,72,43)(15,21,19,86,33)(16,42,49,65,66,26,47,68,95,81)(34,62,51,78,54,37,41,64,48,80)(40,69,82,79,59,57,61,84,60,71)

name M12.2
degree 24
order 190080
gen (1,18)(2,5,13,10,24,7)(3,23,15,17,9,22,8,6,12,16,14,20)(4,21,11,19)
gen (1,11)(2,18)(3,7)(4,10)(5,14)(6,21)(8,12)(9,15)(13,16)(17,19)(20,22)(23,24)

name M22.2
degree 22
order 887040
gen (1,17,21,19,8,22,15)(2,12,18,16,5,10,9,6,3,13,20,4,11,14)
gen (1,7,17,4,6,14,10,18,12,22,20)(2,9,3,19,21,15,16,8,5,13,11)

name J2.2
degree 100
order 1209600
gen (1,34,65,72,38,36,5,10,45,76,90,35)(2,17,16,3,56,64,82,58,89,37,55,91)(4,93,80,15,60,7,53,68,28,54,18,79)(6,25,27,47,32,20,84,73,86,12,19,99)(8,66,81,57,62,77,21,30,31,29,70,78)(9,40,67,74,94,42,14,22,69,39,92,26)(11,71,87,75,13,97,85,95,88,51,83,49)(23,41,50,24,98,46,33,100,52,44,96,48)(43,61,59,63)
gen (1,3,98,12)(2,70,64,24)(4,32,80,38)(5,82,100,10)(6,81,54,51)(7,34,73,19)(8,63,96,58)(9,72,61,68)(11,74,17,50)(13,31,20,21)(14,79,95,89)(15,53,59,97)(16,71,90,52)(18,85,77,25)(22,33,28,43)(23,69,87,45)(26,92,49,35)(27,65,84,76)(29,41,99,36)(30,42,93,75)(37,66,40,86)(39,48,91,88)(44,78,56,57)(46,94,55,47)(60,62,83,67)

name PSL(2,7)
degree 8
order 168
gen (1,2,3,4,5,6,7)
gen (1,8)(2,7)(3,4)(5,6)

name PSL(2,11)
degree 12
order 660
gen (1,2,3,4,5,6,7,8,9,10,11)
gen (1,12)(2,11)(3,6)(4,8)(5,9)(7,10)

name PSL(2,17)
degree 18
order 2448
gen (1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17)
gen (1,18)(2,17)(3,9)(4,12)(6,11)(7,15)(8,13)(10,16)

name L2(11)inM11
degree 11
order 660
gen (1,2,5)(3,10,7,9,6,4)(8,11)
gen (1,5,6,7,3)(4,11,9,10,8)
)GRPDATA" + 1;
}

}  // namespace rackcheck
