#pragma once

// Frozen reference digits for the sine integral, generated offline with
// a 40-digit arbitrary-precision evaluation and rounded to double.

#include <utility>

namespace si_reference {

inline constexpr std::pair<double, double> table[] = {
    {1.0000000000000000e-8, 9.9999999999999999e-9},
    {0.00010000000000000000, 9.9999999944444444e-5},
    {0.0010000000000000000, 0.00099999994444444611},
    {0.25000000000000000, 0.24913357031975716},
    {0.50000000000000000, 0.49310741804306669},
    {0.75000000000000000, 0.72695424715008698},
    {1.0000000000000000, 0.94608307036718301},
    {1.2500000000000000, 1.1464464156732344},
    {1.5000000000000000, 1.3246835311721197},
    {1.7500000000000000, 1.4782334188558448},
    {2.0000000000000000, 1.6054129768026948},
    {2.2500000000000000, 1.7054571975384236},
    {2.5000000000000000, 1.7785201734438266},
    {2.7500000000000000, 1.8256375075997833},
    {3.0000000000000000, 1.8486525279994683},
    {3.1415926535897932, 1.8519370519824662},
    {3.2500000000000000, 1.8501103653966410},
    {3.5000000000000000, 1.8331253986659970},
    {3.7500000000000000, 1.8012287267658792},
    {4.0000000000000000, 1.7582031389490531},
    {4.2500000000000000, 1.7079134885784308},
    {4.5000000000000000, 1.6541404143792440},
    {4.7500000000000000, 1.6004250002514446},
    {5.0000000000000000, 1.5499312449446741},
    {5.2500000000000000, 1.5053321685602444},
    {5.5000000000000000, 1.4687240726650987},
    {5.7500000000000000, 1.4415719662581721},
    {6.0000000000000000, 1.4246875512805065},
    {6.2500000000000000, 1.4182395137091628},
    {6.2831853071795865, 1.4181515761326285},
    {6.5000000000000000, 1.4217942744358817},
    {6.7500000000000000, 1.4343838985602490},
    {7.0000000000000000, 1.4545966142480936},
    {7.2500000000000000, 1.4806844124588581},
    {7.5000000000000000, 1.5106815309433859},
    {7.7500000000000000, 1.5425272969584612},
    {8.0000000000000000, 1.5741868217069421},
    {8.2500000000000000, 1.6037633956173396},
    {8.5000000000000000, 1.6295970995903856},
    {8.7500000000000000, 1.6503450797941942},
    {9.0000000000000000, 1.6650400758296025},
    {9.2500000000000000, 1.6731250775880633},
    {9.5000000000000000, 1.6744633422814331},
    {9.7500000000000000, 1.6693243553039813},
    {10.000000000000000, 1.6583475942188740},
    {10.250000000000000, 1.6424870876268712},
    {10.500000000000000, 1.6229406928080559},
    {10.750000000000000, 1.6010687030229258},
    {11.000000000000000, 1.5783068069457274},
    {11.250000000000000, 1.5560785444724914},
    {11.500000000000000, 1.5357122369821515},
    {11.750000000000000, 1.5183669337250362},
    {12.000000000000000, 1.5049712415263734},
    {12.250000000000000, 1.4961780369236550},
    {12.500000000000000, 1.4923370522865000},
    {12.750000000000000, 1.4934862408192683},
    {13.000000000000000, 1.4993617228628246},
    {13.250000000000000, 1.5094250600495011},
    {13.500000000000000, 1.5229056528120785},
    {13.750000000000000, 1.5388552612532761},
    {14.000000000000000, 1.5562110500776651},
    {14.250000000000000, 1.5738631836328987},
    {14.500000000000000, 1.5907228620708923},
    {14.750000000000000, 1.6057867951737974},
    {15.000000000000000, 1.6181944437083687},
    {15.125000000000000, 1.6231840659338354},
    {15.250000000000000, 1.6272748938066724},
    {15.375000000000000, 1.6304182861705808},
    {15.500000000000000, 1.6325809314229245},
    {15.625000000000000, 1.6337451081393684},
    {15.750000000000000, 1.6339087063974239},
    {15.875000000000000, 1.6330850131265355},
    {15.900000000000000, 1.6328040281824160},
    {16.000000000000000, 1.6313022682700329},
    {16.000000001000000, 1.6313022682520389},
    {16.125000000000000, 1.6286030018535785},
    {16.250000000000000, 1.6250431651689954},
    {16.375000000000000, 1.6206910721583533},
    {16.500000000000000, 1.6156261696817123},
    {16.625000000000000, 1.6099376576383189},
    {16.750000000000000, 1.6037229818556642},
    {16.875000000000000, 1.5970862242393635},
    {17.000000000000000, 1.5901364158707011},
    {17.250000000000000, 1.5757480685575935},
    {17.500000000000000, 1.5614627703236354},
    {17.750000000000000, 1.5481532193006825},
    {18.000000000000000, 1.5366080968611855},
    {18.250000000000000, 1.5274866681251265},
    {18.500000000000000, 1.5212824067317503},
    {18.750000000000000, 1.5182975804282479},
    {19.000000000000000, 1.5186300317693639},
    {19.250000000000000, 1.5221726302135070},
    {19.500000000000000, 1.5286251042074082},
    {19.750000000000000, 1.5375172300668957},
    {20.000000000000000, 1.5482417010434398},
    {22.500000000000000, 1.6104113009764072},
    {25.000000000000000, 1.5314825509999613},
    {27.500000000000000, 1.5958070543497261},
    {30.000000000000000, 1.5667565400303511},
    {32.500000000000000, 1.5555993936553464},
    {35.000000000000000, 1.5969222045083056},
    {37.500000000000000, 1.5448334540038943},
    {40.000000000000000, 1.5869851193547845},
    {42.500000000000000, 1.5692686525230871},
    {45.000000000000000, 1.5587150008964128},
    {47.500000000000000, 1.5905224875563987},
    {50.000000000000000, 1.5516170724859359},
    {52.500000000000000, 1.5822370078244048},
    {55.000000000000000, 1.5707241333981518},
    {57.500000000000000, 1.5604592269452875},
    {60.000000000000000, 1.5867456162599474},
    {62.500000000000000, 1.5557602805186277},
    {65.000000000000000, 1.5792499558786024},
    {67.500000000000000, 1.5716702404287454},
    {70.000000000000000, 1.5615948491780061},
    {72.500000000000000, 1.5842236812549099},
    {75.000000000000000, 1.5585795360581042},
    {77.500000000000000, 1.5771846472809631},
    {80.000000000000000, 1.5723308869124873},
    {82.500000000000000, 1.5624097422594493},
    {85.000000000000000, 1.5823983781438871},
    {87.500000000000000, 1.5606402860960047},
    {90.000000000000000, 1.5756634066574563},
    {92.500000000000000, 1.5728142098235948},
    {95.000000000000000, 1.5630363328822040},
    {97.500000000000000, 1.5809995039095064},
    {99.990000000000000, 1.5622765363257515},
    {100.00000000000000, 1.5622254668890563},
};

}
