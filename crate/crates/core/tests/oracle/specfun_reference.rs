// Generated by tests/oracle/gen_reference.py (mpmath, 50 digits). Do not edit.
#![allow(clippy::excessive_precision)]

/// (n, x, J_n(x), Y_n(x))
pub const BESSEL_TABLE: &[(i32, f64, f64, f64)] = &[
    (0, 1e-3, 9.9999975000001562e-1, -4.4714166113759233),
    (0, 0.01, 9.9997500015624957e-1, -3.005455637083646),
    (0, 0.1, 9.9750156206604003e-1, -1.5342386513503668),
    (0, 0.5, 9.384698072408129e-1, -4.4451873350670656e-1),
    (0, 1.0, 7.6519768655796655e-1, 8.8256964215676958e-2),
    (0, 1.9, 2.8181855937438547e-1, 4.9681997128382021e-1),
    (0, 2.1, 1.6660698033199033e-1, 5.1829373751376073e-1),
    (0, 5.0, -1.775967713143383e-1, -3.0851762524903378e-1),
    (0, 10.0, -2.4593576445134834e-1, 5.5671167283599391e-2),
    (0, 17.3, -1.3370064707576429e-1, -1.3750521344352487e-1),
    (0, 24.9, 8.3245968353015682e-2, -1.3649918399676511e-1),
    (0, 25.1, 1.0827567149994929e-1, -1.167677076380371e-1),
    (0, 40.0, 7.3668905842372896e-3, 1.2593641705826093e-1),
    (0, 59.5, -5.7808831474381268e-2, 8.5774433112084859e-2),
    (0, 100.0, 1.9985850304223122e-2, -7.7244313365083152e-2),
    (0, 500.0, -3.4100556880731998e-2, 1.0506708739831374e-2),
    (0, 1000.0, 2.4786686152420175e-2, 4.7159179776228134e-3),
    (0, 2000.0, 7.0983418331996168e-3, 1.6368366425995577e-2),
    (1, 1e-3, 4.999999375000026e-4, -6.3662216723113943e+2),
    (1, 0.01, 4.9999375002604161e-3, -6.3678596282060656e+1),
    (1, 0.1, 4.9937526036241998e-2, -6.458951094702027),
    (1, 0.5, 2.4226845767487389e-1, -1.4714723926702431),
    (1, 1.0, 4.4005058574493352e-1, -7.8121282130028872e-1),
    (1, 1.9, 5.8115707271343407e-1, -1.6440577233159526e-1),
    (1, 2.1, 5.6829213575703867e-1, -5.1678612130423582e-2),
    (1, 5.0, -3.2757913759146522e-1, 1.4786314339122684e-1),
    (1, 10.0, 4.3472746168861437e-2, 2.4901542420695388e-1),
    (1, 17.3, -1.414233354920139e-1, 1.29785346739084e-1),
    (1, 24.9, -1.3485569953140874e-1, -8.6002557595554442e-2),
    (1, 25.1, -1.1463478413442273e-1, -1.1062223322783083e-1),
    (1, 40.0, 1.26038318037585e-1, -5.7935058215496329e-3),
    (1, 59.5, 8.529170609526627e-2, 5.8531614405315922e-2),
    (1, 100.0, -7.7145352014112158e-2, -2.0372312002759793e-2),
    (1, 500.0, 1.0472613470372293e-2, 3.4111080629137136e-2),
    (1, 1000.0, 4.7283119070895239e-3, -2.4784331292351779e-2),
    (1, 2000.0, 1.6370141522854217e-2, -7.094249963671969e-3),
    (2, 1e-3, 1.2499998958333366e-7, -1.2732398630456675e+6),
    (2, 0.01, 1.2499895833658854e-5, -1.2732713800775048e+4),
    (2, 0.1, 1.2489586587999188e-3, -1.2764478324269017e+2),
    (2, 0.5, 3.0604023458682641e-2, -5.4413708371742657),
    (2, 1.0, 1.1490348493190048e-1, -1.6506826068162544),
    (2, 1.9, 3.2992572769238724e-1, -6.698786790012889e-1),
    (2, 2.1, 3.7462362515090364e-1, -5.6751146335225938e-1),
    (2, 5.0, 4.6565116277752216e-2, 3.6766288260552452e-1),
    (2, 10.0, 2.5463031368512062e-1, -5.8680824422086146e-3),
    (2, 17.3, 1.1735112852177425e-1, 1.5250929977174268e-1),
    (2, 24.9, -9.407775144790795e-2, 1.2959134804531496e-1),
    (2, 25.1, -1.1740991724771206e-1, 1.0795318706211433e-1),
    (2, 40.0, -1.0649746823580396e-3, -1.2622609234933841e-1),
    (2, 59.5, 6.0675779578423832e-2, -8.3806983888376761e-2),
    (2, 100.0, -2.1528757344505366e-2, 7.6836867125027956e-2),
    (2, 500.0, 3.4142447334613487e-2, -1.0370264417314826e-2),
    (2, 1000.0, -2.4777229528605996e-2, -4.765486640207517e-3),
    (2, 2000.0, -7.0819716916767625e-3, -1.6375460675959249e-2),
    (3, 1e-3, 2.0833332031250033e-11, -5.0929588155605027e+9),
    (3, 0.01, 2.083320312532552e-8, -5.093021841713737e+6),
    (3, 0.1, 2.0820315754756261e-5, -5.0993323786129049e+3),
    (3, 0.5, 2.5637299945872441e-3, -4.2059494304723883e+1),
    (3, 1.0, 1.9563353982668406e-2, -5.8215176059647288),
    (3, 1.9, 1.1342340663896011e-1, -1.245865130829013),
    (3, 2.1, 1.4527667405420637e-1, -1.0292956037786419),
    (3, 5.0, 3.6483123061366699e-1, 1.4626716269319277e-1),
    (3, 10.0, 5.8379379305186812e-2, -2.5136265718383733e-1),
    (3, 17.3, 1.6855654439878251e-1, -9.4523080895906499e-2),
    (3, 24.9, 1.1974280773254803e-1, 1.0682044483174962e-1),
    (3, 25.1, 9.5924040349926783e-2, 1.2782592837717176e-1),
    (3, 40.0, -1.261448155058208e-1, -6.8291034133842081e-3),
    (3, 59.5, -8.121266208999408e-2, -6.4165697355795032e-2),
    (3, 100.0, 7.6284201720331943e-2, 2.3445786687760912e-2),
    (3, 500.0, -1.0199473891695385e-2, -3.4194042744475654e-2),
    (3, 1000.0, -4.8274208252039479e-3, 2.4765269345790949e-2),
    (3, 2000.0, -1.638430546623757e-2, 7.0614990423200505e-3),
    (5, 1e-3, 2.6041665581597242e-19, -2.4446200786802641e+17),
    (5, 0.01, 2.6041558159915984e-14, -2.4446352048297114e+12),
    (5, 0.1, 2.6030817909644408e-9, -2.4461484502303915e+7),
    (5, 0.5, 8.0536272413574741e-6, -7.9463014788074733e+3),
    (5, 1.0, 2.4975773021123443e-4, -2.6040586662581222e+2),
    (5, 1.9, 5.5384930136158811e-3, -1.249911280794468e+1),
    (5, 2.1, 8.8284171173864647e-3, -8.0119734204972886),
    (5, 5.0, 2.6114054612017009e-1, -4.5369482249110188e-1),
    (5, 10.0, -2.3406152818679364e-1, 1.354030476893623e-1),
    (5, 17.3, -1.9578993694872402e-1, 8.8389786158012557e-3),
    (5, 24.9, -8.0246762733942249e-2, -1.4018638276614222e-1),
    (5, 25.1, -5.1194170474627872e-2, -1.5249435491003364e-1),
    (5, 40.0, 1.2257346597711779e-1, 3.1869448780850364e-2),
    (5, 59.5, 7.195346320300885e-2, 7.4563881342177117e-2),
    (5, 100.0, -7.4195736964513921e-2, -2.9480196281661896e-2),
    (5, 500.0, 9.6512364353543636e-3, 3.4353401718945752e-2),
    (5, 1000.0, 5.0254069452331861e-3, -2.4725956719740691e-2),
    (5, 2000.0, 1.6412436741338682e-2, -6.9959124616277057e-3),
    (10, 1e-3, 2.6911443943049988e-40, -1.1828049377990417e+38),
    (10, 0.01, 2.6911383392363444e-30, -1.1828081905176634e+28),
    (10, 0.1, 2.6905328954342156e-20, -1.1831335132045198e+18),
    (10, 0.5, 2.6131773608228031e-13, -1.2196362334956963e+11),
    (10, 1.0, 2.6306151236874532e-10, -1.2161801427868919e+8),
    (10, 1.9, 1.5195615133800903e-7, -2.134054550874671e+5),
    (10, 2.1, 4.0589914106619263e-7, -8.0230304901412186e+4),
    (10, 5.0, 1.4678026473104741e-3, -2.5129110095610097e+1),
    (10, 10.0, 2.0748610663335886e-1, -3.5981415218340272e-1),
    (10, 17.3, -1.7141203035929609e-1, -1.2479683202445848e-1),
    (10, 24.9, -8.8688801558025489e-2, -1.4154908531382969e-1),
    (10, 25.1, -6.1095034514211922e-2, -1.5461319280028603e-1),
    (10, 40.0, 1.1938336278226095e-1, -4.6723877232677865e-2),
    (10, 59.5, 1.0322395510370478e-1, -1.4079532593002604e-2),
    (10, 100.0, -5.4732176935472015e-2, 5.8331574236414929e-2),
    (10, 500.0, 3.4982637503815107e-2, -7.0504399730159793e-3),
    (10, 1000.0, -2.4520622306036558e-2, -5.9490005741626686e-3),
    (10, 2000.0, -6.6869981694897591e-3, -1.6540795345574198e-2),
    (15, 1e-3, 2.33372912974026e-62, -9.0930257740103468e+59),
    (15, 0.01, 2.333725519755637e-47, -9.0930418491962359e+44),
    (15, 0.1, 2.333364547833463e-32, -9.0946495223494845e+29),
    (15, 0.5, 7.094207076602067e-22, -2.9929364609532906e+19),
    (15, 1.0, 2.2975315322103444e-17, -9.256973275752208e+14),
    (15, 1.9, 3.3482411820281793e-13, -6.3895577630590114e+10),
    (15, 2.1, 1.4837246441101766e-12, -1.4445221013702932e+10),
    (15, 5.0, 4.7967432775179572e-7, -4.6940495637945749e+4),
    (15, 10.0, 4.507973143721253e-3, -6.3647458769391294),
    (15, 17.3, 2.6418475766837696e-1, -1.4522134275302584e-2),
    (15, 24.9, 8.5845619242100943e-2, -1.5685385424973933e-1),
    (15, 25.1, 1.0910014206160573e-1, -1.4026918001927805e-1),
    (15, 40.0, 1.2288081079867546e-1, -4.5446410869387845e-2),
    (15, 59.5, 8.3839478289980764e-2, -6.3458301181758738e-2),
    (15, 100.0, 1.5198121223927323e-2, 7.8790686946702843e-2),
    (15, 500.0, -2.6338360875653658e-3, -3.5593189743363339e-2),
    (15, 1000.0, -7.4691999859874156e-3, 2.4101916439106697e-2),
    (15, 2000.0, -1.6741786203947666e-2, 6.166962281137298e-3),
    (30, 1e-3, 3.5110745564222147e-132, -3.0219607629673351e+129),
    (30, 0.01, 3.5110717532266764e-102, -3.0219633420556786e+99),
    (30, 0.1, 3.5107914446214572e-72, -3.0222212624030218e+69),
    (30, 0.5, 3.2633568289139785e-51, -3.2518065601447757e+48),
    (30, 1.0, 3.4828697942514829e-42, -3.0481287832256432e+39),
    (30, 1.9, 7.8595693854132733e-34, -1.3527073666958756e+31),
    (30, 2.1, 1.5724064938195914e-32, -6.7644405364587278e+29),
    (30, 5.0, 2.6711772782507988e-21, -4.0285684185540876e+18),
    (30, 10.0, 1.551096078257467e-12, -7.2561423161003306e+9),
    (30, 17.3, 3.9318418333182685e-6, -3.3053622489407634e+3),
    (30, 24.9, 1.1004804330982134e-2, -1.760927208677266),
    (30, 25.1, 1.2661897562488371e-2, -1.561930681445687),
    (30, 40.0, -1.0408594976564973e-1, -1.1471458668505026e-1),
    (30, 59.5, 9.9006608738740937e-2, 5.0844680399877575e-2),
    (30, 100.0, 8.1460129581172223e-2, 6.1388392120100335e-3),
    (30, 500.0, 2.9448556906477901e-2, 2.0206915267368764e-2),
    (30, 1000.0, -2.0271896981075845e-2, -1.5031851431420546e-2),
    (30, 2000.0, -3.2676454569998812e-3, -1.7540472778503015e-2),
    (60, 1e-3, 1.0423784133801954e-280, -5.0894806553633806e+277),
    (60, 0.01, 1.0423779904480547e-220, -5.08948279035784e+217),
    (60, 0.1, 1.0423356980865727e-160, -5.0896962944046695e+157),
    (60, 0.5, 9.0319327113893073e-119, -5.8739908800922681e+115),
    (60, 1.0, 1.0381149765645213e-100, -5.1110927753066711e+97),
    (60, 1.9, 5.4552577957110237e-84, -9.7297463533596363e+80),
    (60, 2.1, 2.2046142563137313e-81, -2.4078670739912449e+78),
    (60, 5.0, 8.1600240380935178e-59, -6.5241072937823727e+55),
    (60, 10.0, 6.9094332494399619e-41, -7.7870957750152609e+37),
    (60, 17.3, 5.7899561811612553e-27, -9.5692480320280325e+23),
    (60, 24.9, 4.5973043051096897e-18, -1.2684069151641098e+15),
    (60, 25.1, 7.1181123818944768e-18, -8.2059230698790436e+14),
    (60, 40.0, 1.3092671382981989e-7, -5.4385393022829762e+4),
    (60, 59.5, 1.0105896539046458e-1, -2.217035458748319e-1),
    (60, 100.0, 1.0631563042277031e-3, -8.9194694150377778e-2),
    (60, 500.0, 3.5332404831978475e-2, 5.8418781448366494e-3),
    (60, 1000.0, -1.0245851850792056e-2, 2.3082270887938173e-2),
    (60, 2000.0, -8.4123357247356252e-3, 1.5738037362759387e-2),
];

/// (Re w, Im w, Re F(w), Im F(w))
pub const BOUNDARY_LOSS_TABLE: &[(f64, f64, f64, f64)] = &[
    (0.0, 0.0, 1.0, 0.0),
    (1.0, 1.0, 9.079650100217769e-2, 1.7108658129968914e-1),
    (0.3, 0.1, 7.1001845554120561e-1, 3.9209127538102546e-1),
    (-2.0, 0.5, -1.0113904880040117e-1, -1.1401257127648056e-1),
    (3.0, 0.001, -6.9622420737472029e-2, 7.1741971746648182e-4),
    (5.5, 2.5, -8.8952197253748045e-3, 1.0898389400131857e-2),
    (7.9, 0.3, -8.1746749328250335e-3, 6.3763407560939592e-4),
    (8.1, 0.3, -7.7681610985133723e-3, 5.9016181989495558e-4),
    (12.0, 0.01, -3.5090274011993013e-3, 5.9108374149751372e-6),
    (0.5, -0.4, 9.2388933281393654e-1, 1.6768724928143023),
    (2.0, -1.5, 1.2276057962277929, 8.4452240829509042e-1),
    (-3.0, -2.0, 6.7801564256048106e-2, 3.270026447996304e-3),
    (20.0, 20.0, 1.1718589788910275e-6, 6.2499633798074219e-4),
    (35.0, 30.0, -3.5827752631588185e-5, 2.3257598263372036e-4),
    (0.01, 7.0, 9.9065481043295098e-3, 2.7494359150557139e-5),
    (6.0, -5.9, -7.1532957153648986, 5.5771776841525079),
];
