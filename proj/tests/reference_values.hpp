// Generated by tests/gen_reference_values.py -- DO NOT EDIT BY HAND.
// Frozen expected values for the test suite, computed at 60 significant digits
// and cross-checked against independent integral oracles before freezing.
#pragma once
#include <limits>

namespace refvals {

struct XyPin { double x; double value; };
struct OmegaPin { double rho_db; double omega; double value; };
struct RhoPin { double rho_db; double value; };
struct OmaPin { double rho_db; double blockage; double rate; };
struct WindowPin { double lo_db; double hi_db; double value; };
struct SumPin { double rho_db; double noma_sum; double oma_tdma_sum; double oma_full_single_far; };
struct GeomPin { double r_d_m; double blockage_f_nlos_55db; double rate_n_isic_30db; double rate_f_nlos_30db; };

inline constexpr XyPin kEiGrid[] = {
    {-1e-06, -13.23829589306249},
    {-1.4563484775012444e-06, -12.862364089330027},
    {-2.1209508879201924e-06, -12.486432493851183},
    {-3.0888435964774785e-06, -12.110501201661972},
    {-4.498432668969444e-06, -11.73457035116771},
    {-6.5512855685955095e-06, -11.358640143934277},
    {-9.540954763499944e-06, -10.982710873510785},
    {-1.3894954943731361e-05, -10.606782967404795},
    {-2.0235896477251556e-05, -10.230857048211563},
    {-2.94705170255181e-05, -9.854934022636696},
    {-4.291934260128778e-05, -9.479015211138224},
    {-6.250551925273976e-05, -9.103102536718007},
    {-9.102981779915228e-05, -8.727198799841048},
    {-0.00013257113655901095, -8.351308078757066},
    {-0.00019306977288832496, -7.9754363123877985},
    {-0.0002811768697974231, -7.599592148958758},
    {-0.0004094915062380423, -7.223788181361402},
    {-0.0005963623316594642, -6.848042745122946},
    {-0.000868511373751353, -6.472382534442992},
    {-0.0012648552168552957, -6.096846406894762},
    {-0.0018420699693267163, -5.721490913460547},
    {-0.0026826957952797246, -5.346398329022039},
    {-0.003906939937054617, -4.971688298491045},
    {-0.005689866029018299, -4.597534693815525},
    {-0.008286427728546842, -4.224189944195629},
    {-0.012067926406393288, -3.8520200061596563},
    {-0.01757510624854793, -3.4815543167262217},
    {-0.025595479226995333, -3.1135564950940218},
    {-0.03727593720314938, -2.749123031627631},
    {-0.054286754393238594, -2.3898181406051755},
    {-0.07906043210907701, -2.0378519368529786},
    {-0.11513953993264481, -1.696303095533539},
    {-0.16768329368110066, -1.3693703598861051},
    {-0.244205309454865, -1.0625999972346556},
    {-0.35564803062231287, -0.7829662121510617},
    {-0.5179474679231213, -0.5385735356462112},
    {-0.7543120063354622, -0.3376386179299092},
    {-1.0985411419875573, -0.18643298513171255},
    {-1.5998587196060574, -0.08632616325639411},
    {-2.329951810515372, -0.031224264799085803},
    {-3.39322177189533, -0.007957799046482786},
    {-4.941713361323838, -0.0012296560384529524},
    {-7.196856730011514, -9.25146344279559e-05},
    {-10.481131341546853, -2.4603112460089518e-06},
    {-15.264179671752334, -1.4491044322433012e-08},
    {-22.229964825261955, -9.55754658917676e-12},
    {-32.37457542817646, -2.611282893426331e-16},
    {-47.1486636345739, -6.937316248005589e-23},
    {-68.66488450042998, -2.169165573746696e-32},
    {-100.0, -3.683597761682032e-46},
};

inline constexpr XyPin kEiExtra[] = {
    {-1e-12, -27.053805451028015},
    {-1e-09, -20.146050173044877},
    {-1e-06, -13.23829589306249},
    {-0.5, -0.5597735947761608},
    {-1.0, -0.21938393439552029},
    {-2.0, -0.04890051070806112},
    {-5.9, -0.00040390350894312923},
    {-6.0, -0.0003600824521626587},
    {-6.1, -0.0003210870279496548},
    {-40.0, -1.036773261451657e-19},
    {-150.0, -4.751924906560163e-68},
    {-300.0, -1.71038427680451e-133},
    {-700.0, -1.406518766234033e-307},
};

inline constexpr XyPin kE1Scaled[] = {
    {1e-06, 13.238309131365003},
    {0.001, 6.337874070325488},
    {0.1, 2.0146425447084515},
    {0.5, 0.9229106324837305},
    {1.0, 0.5963473623231941},
    {2.0, 0.3613286168882226},
    {6.0, 0.1452676292338869},
    {6.5, 0.1353096738395544},
    {10.0, 0.09156333393978808},
    {40.0, 0.024404115079628575},
    {100.0, 0.009901942286733018},
    {700.0, 0.0014265364183008867},
    {1000.0, 0.0009990019940238808},
};

inline constexpr OmegaPin kBlockageNNisic[] = {
    {30.0, 0.01, 1.0},
    {46.0, 0.01, 1.0},
    {50.0, 0.01, 1.0},
    {52.0, 0.01, 0.9999985504510552},
    {54.0, 0.01, 0.9999418401178316},
    {56.0, 0.01, 0.999828147199468},
    {60.0, 0.01, 0.9996769959649717},
    {70.0, 0.01, 0.9995870290839052},
    {80.0, 0.01, 0.9995780328411267},
    {52.0, 0.001, 0.9999855067422715},
    {60.0, 0.001, 0.9967751970213501},
    {80.0, 0.001, 0.9957888778848292},
    {52.0, 0.1, 0.9999998550428735},
    {60.0, 0.1, 0.9999676943522467},
    {80.0, 0.1, 0.9999577947210759},
};

inline constexpr XyPin kFloorNNisic[] = {
    {0.001, 0.9957789200458396},
    {0.01, 0.9995770332635936},
    {0.1, 0.9999576947253014},
};

inline constexpr RhoPin kBlockageNIsic[] = {
    {40.0, 1.0},
    {48.0, 1.0},
    {50.0, 1.0},
    {52.0, 0.9427515728985516},
    {54.0, 0.5030915295098127},
    {55.0, 0.19461998541818173},
    {56.0, 0.0},
    {60.0, 0.0},
};

inline constexpr RhoPin kBlockageFLos[] = {
    {45.0, 1.0},
    {52.0, 0.8891874216579715},
    {54.0, 0.6781506008313768},
    {56.0, 0.3436797801446711},
    {57.0, 0.10901044400124991},
    {57.39, 0.0018072113651974805},
    {58.0, 0.0},
    {60.0, 0.0},
};

inline constexpr RhoPin kBlockageFNlos[] = {
    {0.0, 1.0},
    {10.0, 1.0},
    {20.0, 1.0},
    {30.0, 1.0},
    {40.0, 0.9999996126412732},
    {45.0, 0.9977657188516468},
    {50.0, 0.9250175590911414},
    {55.0, 0.6181199379815128},
    {60.0, 0.2748784121114131},
    {70.0, 0.032329705551285975},
    {80.0, 0.0032882028047261196},
};

inline constexpr RhoPin kAsymBlockageFNlos[] = {
    {50.0, 3.294424767029734},
    {60.0, 0.32944247670297344},
    {70.0, 0.03294424767029734},
    {80.0, 0.0032944247670297342},
};

inline constexpr RhoPin kRateNIsic[] = {
    {10.0, 6.1033610033219275e-05},
    {20.0, 0.0006102120351904344},
    {30.0, 0.006089753106767621},
    {40.0, 0.059698638335329596},
    {50.0, 0.5047717170462266},
    {60.0, 2.3563147918353637},
    {70.0, 5.391758546757318},
    {80.0, 8.68145759107725},
    {90.0, 12.00012050983043},
};

inline constexpr OmegaPin kRateNNisic[] = {
    {10.0, 0.01, 5.588450740557503e-05},
    {30.0, 0.01, 0.0012285377146052017},
    {50.0, 0.01, 0.0037490978584564304},
    {60.0, 0.01, 0.0046163863761127695},
    {30.0, 0.1, 0.0002487998450071801},
};

inline constexpr RhoPin kRateFLos[] = {
    {10.0, 9.249889438894132e-05},
    {20.0, 0.0009243772178810781},
    {30.0, 0.009183182125673975},
    {40.0, 0.08629407748622335},
    {50.0, 0.5608351969721852},
    {60.0, 1.3988602473523875},
    {70.0, 1.6940050121756018},
    {80.0, 1.732544085429254},
    {90.0, 1.736522140168835},
};

inline constexpr RhoPin kRateFNlos[] = {
    {10.0, 9.249209346521355e-05},
    {20.0, 0.0009237000888437729},
    {30.0, 0.00911828160770174},
    {40.0, 0.08169067528654662},
    {50.0, 0.4670454095712457},
    {60.0, 1.178196475299336},
    {70.0, 1.6003636058493111},
    {80.0, 1.713558643742941},
    {90.0, 1.733611063465706},
};

inline constexpr RhoPin kRateUpperNIsic[] = {
    {40.0, 0.05977920501881536},
    {50.0, 0.5089988280683784},
    {60.0, 2.3869828052146675},
};

inline constexpr OmaPin kOmaTdmaN[] = {
    {20.0, 1.0, 0.001016484530291181},
    {30.0, 1.0, 0.010096697038618395},
    {40.0, 1.0, 0.09479206001667323},
    {50.0, 1.0, 0.6265144693589328},
    {60.0, 0.0, 1.9379040237879017},
};

inline constexpr OmaPin kOmaTdmaFLos[] = {
    {20.0, 1.0, 0.0006603814664467783},
    {30.0, 1.0, 0.006570500447588012},
    {40.0, 1.0, 0.06264209567996326},
    {50.0, 1.0, 0.4518708004210555},
    {60.0, 0.0, 1.6131076759638434},
};

inline constexpr OmaPin kOmaTdmaFNlos[] = {
    {20.0, 1.0, 0.0006600093005008083},
    {30.0, 1.0, 0.006534730687096102},
    {40.0, 0.9999999640996706, 0.06004368272583435},
    {50.0, 0.9494684010624895, 0.39054038001450464},
    {60.0, 0.31871930375475127, 1.3546953709802825},
};

inline constexpr OmaPin kOmaFullN[] = {
    {20.0, 1.0, 0.002032969060582362},
    {30.0, 1.0, 0.02019339407723679},
    {40.0, 1.0, 0.18958412003334646},
    {50.0, 0.11349065079348598, 1.2530289387178657},
    {60.0, 0.0, 3.8758080475758034},
};

inline constexpr OmaPin kOmaFullFLos[] = {
    {20.0, 1.0, 0.0013207629328935565},
    {30.0, 1.0, 0.013141000895176023},
    {40.0, 1.0, 0.12528419135992652},
    {50.0, 0.6808566342856549, 0.903741600842111},
    {60.0, 0.0, 3.226215351927687},
};

inline constexpr OmaPin kOmaFullFNlos[] = {
    {20.0, 1.0, 0.0013200186010016166},
    {30.0, 1.0, 0.013069461374192204},
    {40.0, 0.999296029698594, 0.1200873654516687},
    {50.0, 0.6964760749728678, 0.7810807600290093},
    {60.0, 0.122335618777886, 2.709390741960565},
};

inline constexpr SumPin kSumRate[] = {
    {20.0, 0.0015345892530715126, 0.0016768659967379594, 0.0013207629328935565},
    {30.0, 0.015272935232441595, 0.016667197486206407, 0.013141000895176023},
    {40.0, 0.14599271582155296, 0.1574341556966365, 0.12528419135992652},
    {50.0, 1.0656069140184117, 1.0783852697799883, 0.903741600842111},
    {60.0, 3.755175039187751, 3.551011699751745, 3.226215351927687},
};

inline constexpr WindowPin kDiversityFNlos[] = {
    {40.0, 50.0, 0.03384985498559761},
    {70.0, 80.0, 0.9926431537704333},
};

inline constexpr WindowPin kDiversityNNisic[] = {
    {60.0, 70.0, 3.9086503371292665e-05},
};

inline constexpr WindowPin kSlopeNIsic[] = {
    {50.0, 70.0, 0.7355648120789315},
    {70.0, 80.0, 0.9902980890474318},
    {70.0, 90.0, 0.9946575865449583},
};

inline constexpr WindowPin kSlopeFLos[] = {
    {50.0, 70.0, 0.17055905227861945},
    {70.0, 90.0, 0.006399465427723963},
};

inline constexpr WindowPin kSlopeFNlos[] = {
    {50.0, 70.0, 0.1705813858557485},
    {70.0, 90.0, 0.02005574079424993},
};

inline constexpr GeomPin kGeomSweep[] = {
    {10.0, 0.6181199379815128, 0.006089753106767621, 0.00911828160770174},
    {20.0, 0.8733146990746906, 0.0032640803199791694, 0.00403207829984802},
    {30.0, 0.9434772609733728, 0.0020018376645816317, 0.0022881033265815197},
};

inline constexpr double kEta = 0.000569143365714345;
inline constexpr double kCeilingFLos = 1.736965594166206;
inline constexpr double kRhoStarFLosDb = 57.396283438684314;
inline constexpr double kRhoKneeIsicLoDb = 51.655970761407126;
inline constexpr double kRhoKneeIsicHiDb = 55.52986902479442;
inline constexpr double kRhoKneeFLosLoDb = 50.40658339532413;
inline constexpr double kRhoIsicMidpointDb = 54.01125523048262;
inline constexpr double kExpTailThreshold = 0.0461;
inline constexpr double kExpTailProb = 0.009951818307848422;
inline constexpr double kTdlIsicLos30Db = 0.0;
inline constexpr double kTdlIsicLos60Db = 2.0;
inline constexpr double kTdtIsicLos30Db = 0.015272935232441595;
inline constexpr double kTdtNisicNlos30Db = 0.010346819322306942;

}  // namespace refvals
