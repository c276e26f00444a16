// U.S. Standard Atmosphere 1976, 86 km to 1000 km at 2 km spacing.
// Columns: geometric altitude (km), kinetic temperature (K), pressure (Pa),
// mass density (kg/m^3).

#include "us76_table.hpp"

namespace desurv::detail {

const std::array<Us76Row, kUs76UpperRows> kUs76Upper = {{
    {86.0, 186.9459, 3.733764e-01, 6.957754e-06},
    {88.0, 186.8673, 2.617362e-01, 4.875141e-06},
    {90.0, 186.8673, 1.836074e-01, 3.416449e-06},
    {92.0, 186.9633, 1.289021e-01, 2.392867e-06},
    {94.0, 187.7358, 9.060688e-02, 1.670372e-06},
    {96.0, 189.3050, 6.382840e-02, 1.162611e-06},
    {98.0, 191.7234, 4.513184e-02, 8.078393e-07},
    {100.0, 195.0813, 3.209424e-02, 5.612265e-07},
    {102.0, 199.5274, 2.321770e-02, 3.941996e-07},
    {104.0, 205.3117, 1.695174e-02, 2.775015e-07},
    {106.0, 212.8939, 1.251809e-02, 1.959121e-07},
    {108.0, 223.2860, 9.377302e-03, 1.386299e-07},
    {110.0, 239.9997, 7.157092e-03, 9.749094e-08},
    {112.0, 264.0000, 5.602793e-03, 6.871965e-08},
    {114.0, 288.0000, 4.490936e-03, 5.003775e-08},
    {116.0, 312.0000, 3.670754e-03, 3.744098e-08},
    {118.0, 336.0000, 3.050280e-03, 2.867020e-08},
    {120.0, 360.0000, 2.570785e-03, 2.239309e-08},
    {122.0, 383.5484, 2.193233e-03, 1.781225e-08},
    {124.0, 406.2167, 1.890657e-03, 1.440609e-08},
    {126.0, 428.0381, 1.644391e-03, 1.181803e-08},
    {128.0, 449.0450, 1.441270e-03, 9.814676e-09},
    {130.0, 469.2680, 1.271789e-03, 8.238747e-09},
    {132.0, 488.7369, 1.128939e-03, 6.981456e-09},
    {134.0, 507.4803, 1.007457e-03, 5.965835e-09},
    {136.0, 525.5257, 9.033240e-04, 5.136312e-09},
    {138.0, 542.8994, 8.134238e-04, 4.452043e-09},
    {140.0, 559.6268, 7.353119e-04, 3.882529e-09},
    {142.0, 575.7323, 6.670465e-04, 3.404673e-09},
    {144.0, 591.2395, 6.070697e-04, 3.000753e-09},
    {146.0, 606.1708, 5.541193e-04, 2.657018e-09},
    {148.0, 620.5480, 5.071642e-04, 2.362685e-09},
    {150.0, 634.3920, 4.653583e-04, 2.109212e-09},
    {152.0, 647.7229, 4.281309e-04, 1.890409e-09},
    {154.0, 660.5600, 3.945926e-04, 1.699386e-09},
    {156.0, 672.9218, 3.643128e-04, 1.532013e-09},
    {158.0, 684.8262, 3.371566e-04, 1.385859e-09},
    {160.0, 696.2905, 3.125116e-04, 1.256808e-09},
    {162.0, 707.3311, 2.900736e-04, 1.142389e-09},
    {164.0, 717.9639, 2.697890e-04, 1.041363e-09},
    {166.0, 728.2043, 2.512273e-04, 9.511648e-10},
    {168.0, 738.0669, 2.342492e-04, 8.705589e-10},
    {170.0, 747.5659, 2.187549e-04, 7.985669e-10},
    {172.0, 756.7149, 2.044913e-04, 7.337425e-10},
    {174.0, 765.5271, 1.914100e-04, 6.754866e-10},
    {176.0, 774.0149, 1.793581e-04, 6.228848e-10},
    {178.0, 782.1906, 1.682269e-04, 5.752482e-10},
    {180.0, 790.0658, 1.579724e-04, 5.321559e-10},
    {182.0, 797.6516, 1.484609e-04, 4.929267e-10},
    {184.0, 804.9590, 1.396686e-04, 4.572810e-10},
    {186.0, 811.9982, 1.315012e-04, 4.247382e-10},
    {188.0, 818.7793, 1.239182e-04, 3.950181e-10},
    {190.0, 825.3119, 1.168665e-04, 3.678208e-10},
    {192.0, 831.6053, 1.102973e-04, 3.428807e-10},
    {194.0, 837.6683, 1.041787e-04, 3.199963e-10},
    {196.0, 843.5095, 9.846397e-05, 2.989417e-10},
    {198.0, 849.1371, 9.313063e-05, 2.795667e-10},
    {200.0, 854.5591, 8.813997e-05, 2.616934e-10},
    {202.0, 859.7831, 8.347171e-05, 2.451962e-10},
    {204.0, 864.8164, 7.909706e-05, 2.299439e-10},
    {206.0, 869.6662, 7.499566e-05, 2.158251e-10},
    {208.0, 874.3392, 7.114726e-05, 2.027453e-10},
    {210.0, 878.8419, 6.753181e-05, 1.906054e-10},
    {212.0, 883.1807, 6.413531e-05, 1.793380e-10},
    {214.0, 887.3617, 6.093812e-05, 1.688539e-10},
    {216.0, 891.3905, 5.793152e-05, 1.591077e-10},
    {218.0, 895.2730, 5.509571e-05, 1.500162e-10},
    {220.0, 899.0144, 5.242675e-05, 1.415529e-10},
    {222.0, 902.6200, 4.990456e-05, 1.336392e-10},
    {224.0, 906.0948, 4.752830e-05, 1.262607e-10},
    {226.0, 909.4437, 4.528012e-05, 1.193504e-10},
    {228.0, 912.6711, 4.315883e-05, 1.128947e-10},
    {230.0, 915.7817, 4.115058e-05, 1.068421e-10},
    {232.0, 918.7797, 3.925208e-05, 1.011745e-10},
    {234.0, 921.6692, 3.745464e-05, 9.585825e-11},
    {236.0, 924.4543, 3.575142e-05, 9.086633e-11},
    {238.0, 927.1388, 3.413984e-05, 8.618488e-11},
    {240.0, 929.7263, 3.260826e-05, 8.177457e-11},
    {242.0, 932.2205, 3.116002e-05, 7.763960e-11},
    {244.0, 934.6247, 2.978070e-05, 7.373444e-11},
    {246.0, 936.9422, 2.847463e-05, 7.006669e-11},
    {248.0, 939.1763, 2.723255e-05, 6.660664e-11},
    {250.0, 941.3299, 2.605221e-05, 6.334436e-11},
    {252.0, 943.4060, 2.493236e-05, 6.027292e-11},
    {254.0, 945.4075, 2.386351e-05, 5.736361e-11},
    {256.0, 947.3370, 2.285036e-05, 5.462611e-11},
    {258.0, 949.1973, 2.188299e-05, 5.203134e-11},
    {260.0, 950.9908, 2.096325e-05, 4.958178e-11},
    {262.0, 952.7199, 2.008832e-05, 4.726771e-11},
    {264.0, 954.3870, 1.925184e-05, 4.507056e-11},
    {266.0, 955.9944, 1.845772e-05, 4.299846e-11},
    {268.0, 957.5442, 1.769780e-05, 4.102873e-11},
    {270.0, 959.0386, 1.697395e-05, 3.916451e-11},
    {272.0, 960.4795, 1.628497e-05, 3.740122e-11},
    {274.0, 961.8689, 1.562406e-05, 3.572034e-11},
    {276.0, 963.2086, 1.499574e-05, 3.413195e-11},
    {278.0, 964.5006, 1.439463e-05, 3.262144e-11},
    {280.0, 965.7464, 1.381978e-05, 3.118533e-11},
    {282.0, 966.9478, 1.327280e-05, 2.982661e-11},
    {284.0, 968.1063, 1.274702e-05, 2.852798e-11},
    {286.0, 969.2236, 1.224563e-05, 2.729635e-11},
    {288.0, 970.3011, 1.176751e-05, 2.612820e-11},
    {290.0, 971.3403, 1.130721e-05, 2.500963e-11},
    {292.0, 972.3425, 1.086874e-05, 2.394957e-11},
    {294.0, 973.3091, 1.044918e-05, 2.294039e-11},
    {296.0, 974.2414, 1.004595e-05, 2.197537e-11},
    {298.0, 975.1405, 9.661553e-06, 2.105991e-11},
    {300.0, 976.0078, 9.292678e-06, 2.018564e-11},
    {302.0, 976.8443, 8.938585e-06, 1.935039e-11},
    {304.0, 977.6512, 8.600811e-06, 1.855726e-11},
    {306.0, 978.4295, 8.275955e-06, 1.779796e-11},
    {308.0, 979.1803, 7.964315e-06, 1.707279e-11},
    {310.0, 979.9045, 7.666850e-06, 1.638359e-11},
    {312.0, 980.6031, 7.380336e-06, 1.572263e-11},
    {314.0, 981.2770, 7.105475e-06, 1.509121e-11},
    {316.0, 981.9271, 6.842961e-06, 1.449060e-11},
    {318.0, 982.5543, 6.589937e-06, 1.391406e-11},
    {320.0, 983.1593, 6.347024e-06, 1.336275e-11},
    {322.0, 983.7430, 6.114894e-06, 1.283793e-11},
    {324.0, 984.3062, 5.891196e-06, 1.233411e-11},
    {326.0, 984.8495, 5.676106e-06, 1.185149e-11},
    {328.0, 985.3737, 5.470460e-06, 1.139173e-11},
    {330.0, 985.8795, 5.272497e-06, 1.095073e-11},
    {332.0, 986.3675, 5.081698e-06, 1.052720e-11},
    {334.0, 986.8384, 4.899189e-06, 1.012344e-11},
    {336.0, 987.2927, 4.723860e-06, 9.736873e-12},
    {338.0, 987.7311, 4.554316e-06, 9.364314e-12},
    {340.0, 988.1541, 4.392066e-06, 9.008928e-12},
    {342.0, 988.5623, 4.236678e-06, 8.669640e-12},
    {344.0, 988.9562, 4.085773e-06, 8.341191e-12},
    {346.0, 989.3363, 3.941302e-06, 8.027695e-12},
    {348.0, 989.7031, 3.802944e-06, 7.728354e-12},
    {350.0, 990.0571, 3.668987e-06, 7.439394e-12},
    {352.0, 990.3987, 3.540148e-06, 7.162274e-12},
    {354.0, 990.7284, 3.416716e-06, 6.897525e-12},
    {356.0, 991.0466, 3.297810e-06, 6.643187e-12},
    {358.0, 991.3536, 3.182743e-06, 6.397738e-12},
    {360.0, 991.6500, 3.072468e-06, 6.163128e-12},
    {362.0, 991.9361, 2.966753e-06, 5.938798e-12},
    {364.0, 992.2121, 2.863981e-06, 5.721282e-12},
    {366.0, 992.4786, 2.765324e-06, 5.512995e-12},
    {368.0, 992.7358, 2.670718e-06, 5.313745e-12},
    {370.0, 992.9841, 2.579404e-06, 5.121893e-12},
    {372.0, 993.2237, 2.491025e-06, 4.936649e-12},
    {374.0, 993.4551, 2.406250e-06, 4.759369e-12},
    {376.0, 993.6784, 2.324910e-06, 4.589653e-12},
    {378.0, 993.8939, 2.245839e-06, 4.425044e-12},
    {380.0, 994.1020, 2.169780e-06, 4.267050e-12},
    {382.0, 994.3029, 2.096783e-06, 4.115740e-12},
    {384.0, 994.4968, 2.026494e-06, 3.970348e-12},
    {386.0, 994.6840, 1.958171e-06, 3.829318e-12},
    {388.0, 994.8647, 1.892585e-06, 3.694209e-12},
    {390.0, 995.0392, 1.829609e-06, 3.564733e-12},
    {392.0, 995.2077, 1.768666e-06, 3.439683e-12},
    {394.0, 995.3703, 1.709669e-06, 3.318859e-12},
    {396.0, 995.5273, 1.653009e-06, 3.203038e-12},
    {398.0, 995.6790, 1.598580e-06, 3.091981e-12},
    {400.0, 995.8254, 1.545703e-06, 2.984289e-12},
    {402.0, 995.9667, 1.494670e-06, 2.880537e-12},
    {404.0, 996.1032, 1.445636e-06, 2.781025e-12},
    {406.0, 996.2350, 1.398514e-06, 2.685553e-12},
    {408.0, 996.3623, 1.352611e-06, 2.592713e-12},
    {410.0, 996.4851, 1.308392e-06, 2.503427e-12},
    {412.0, 996.6038, 1.265889e-06, 2.417746e-12},
    {414.0, 996.7184, 1.225027e-06, 2.335502e-12},
    {416.0, 996.8291, 1.185161e-06, 2.255395e-12},
    {418.0, 996.9359, 1.146787e-06, 2.178403e-12},
    {420.0, 997.0391, 1.109887e-06, 2.104485e-12},
    {422.0, 997.1388, 1.074399e-06, 2.033500e-12},
    {424.0, 997.2351, 1.039767e-06, 1.964331e-12},
    {426.0, 997.3280, 1.006413e-06, 1.897815e-12},
    {428.0, 997.4178, 9.743318e-07, 1.833927e-12},
    {430.0, 997.5046, 9.434663e-07, 1.772548e-12},
    {432.0, 997.5883, 9.133738e-07, 1.712792e-12},
    {434.0, 997.6692, 8.843437e-07, 1.655225e-12},
    {436.0, 997.7474, 8.564112e-07, 1.599911e-12},
    {438.0, 997.8228, 8.295292e-07, 1.546748e-12},
    {440.0, 997.8958, 8.033788e-07, 1.495102e-12},
    {442.0, 997.9662, 7.780766e-07, 1.445198e-12},
    {444.0, 998.0342, 7.537237e-07, 1.397229e-12},
    {446.0, 998.0999, 7.302797e-07, 1.351109e-12},
    {448.0, 998.1634, 7.075547e-07, 1.306461e-12},
    {450.0, 998.2247, 6.854723e-07, 1.263132e-12},
    {452.0, 998.2840, 6.642125e-07, 1.221468e-12},
    {454.0, 998.3412, 6.437404e-07, 1.181399e-12},
    {456.0, 998.3965, 6.239934e-07, 1.142795e-12},
    {458.0, 998.4499, 6.046962e-07, 1.105118e-12},
    {460.0, 998.5015, 5.861129e-07, 1.068880e-12},
    {462.0, 998.5514, 5.682136e-07, 1.034017e-12},
    {464.0, 998.5996, 5.509697e-07, 1.000470e-12},
    {466.0, 998.6461, 5.341720e-07, 9.678311e-13},
    {468.0, 998.6911, 5.179081e-07, 9.362669e-13},
    {470.0, 998.7346, 5.022390e-07, 9.058929e-13},
    {472.0, 998.7765, 4.871400e-07, 8.766584e-13},
    {474.0, 998.8171, 4.725434e-07, 8.484297e-13},
    {476.0, 998.8563, 4.582920e-07, 8.209009e-13},
    {478.0, 998.8942, 4.445586e-07, 7.944037e-13},
    {480.0, 998.9308, 4.313219e-07, 7.688945e-13},
    {482.0, 998.9662, 4.185615e-07, 7.443316e-13},
    {484.0, 999.0004, 4.061382e-07, 7.204455e-13},
    {486.0, 999.0334, 3.940870e-07, 6.973016e-13},
    {488.0, 999.0653, 3.824690e-07, 6.750157e-13},
    {490.0, 999.0962, 3.712667e-07, 6.535521e-13},
    {492.0, 999.1260, 3.604633e-07, 6.328765e-13},
    {494.0, 999.1548, 3.498884e-07, 6.126580e-13},
    {496.0, 999.1827, 3.396815e-07, 5.931655e-13},
    {498.0, 999.2096, 3.298378e-07, 5.743886e-13},
    {500.0, 999.2356, 3.203427e-07, 5.562978e-13},
    {502.0, 999.2607, 3.111559e-07, 5.388154e-13},
    {504.0, 999.2851, 3.021739e-07, 5.217462e-13},
    {506.0, 999.3085, 2.935098e-07, 5.053008e-13},
    {508.0, 999.3313, 2.851508e-07, 4.894534e-13},
    {510.0, 999.3532, 2.770848e-07, 4.741798e-13},
    {512.0, 999.3744, 2.692598e-07, 4.593804e-13},
    {514.0, 999.3949, 2.616265e-07, 4.449613e-13},
    {516.0, 999.4147, 2.542606e-07, 4.310644e-13},
    {518.0, 999.4339, 2.471516e-07, 4.176686e-13},
    {520.0, 999.4524, 2.402892e-07, 4.047536e-13},
    {522.0, 999.4703, 2.336239e-07, 3.922252e-13},
    {524.0, 999.4877, 2.271253e-07, 3.800257e-13},
    {526.0, 999.5044, 2.208521e-07, 3.682644e-13},
    {528.0, 999.5206, 2.147954e-07, 3.569238e-13},
    {530.0, 999.5362, 2.089468e-07, 3.459869e-13},
    {532.0, 999.5514, 2.032680e-07, 3.353816e-13},
    {534.0, 999.5660, 1.977256e-07, 3.250447e-13},
    {536.0, 999.5801, 1.923735e-07, 3.150762e-13},
    {538.0, 999.5938, 1.872042e-07, 3.054615e-13},
    {540.0, 999.6070, 1.822108e-07, 2.961867e-13},
    {542.0, 999.6198, 1.773715e-07, 2.872104e-13},
    {544.0, 999.6321, 1.726359e-07, 2.784391e-13},
    {546.0, 999.6441, 1.680614e-07, 2.699781e-13},
    {548.0, 999.6556, 1.636416e-07, 2.618153e-13},
    {550.0, 999.6668, 1.593706e-07, 2.539389e-13},
    {552.0, 999.6776, 1.552428e-07, 2.463377e-13},
    {554.0, 999.6881, 1.511920e-07, 2.388898e-13},
    {556.0, 999.6982, 1.472748e-07, 2.316985e-13},
    {558.0, 999.7079, 1.434888e-07, 2.247588e-13},
    {560.0, 999.7174, 1.398290e-07, 2.180610e-13},
    {562.0, 999.7265, 1.362906e-07, 2.115956e-13},
    {564.0, 999.7354, 1.328356e-07, 2.052930e-13},
    {566.0, 999.7439, 1.294749e-07, 1.991724e-13},
    {568.0, 999.7522, 1.262256e-07, 1.932647e-13},
    {570.0, 999.7602, 1.230835e-07, 1.875615e-13},
    {572.0, 999.7679, 1.200445e-07, 1.820549e-13},
    {574.0, 999.7754, 1.170968e-07, 1.767231e-13},
    {576.0, 999.7826, 1.142078e-07, 1.715070e-13},
    {578.0, 999.7896, 1.114136e-07, 1.664710e-13},
    {580.0, 999.7964, 1.087106e-07, 1.616083e-13},
    {582.0, 999.8029, 1.060953e-07, 1.569122e-13},
    {584.0, 999.8093, 1.035645e-07, 1.523764e-13},
    {586.0, 999.8154, 1.010910e-07, 1.479519e-13},
    {588.0, 999.8213, 9.868318e-08, 1.436533e-13},
    {590.0, 999.8271, 9.635305e-08, 1.395017e-13},
    {592.0, 999.8326, 9.409771e-08, 1.354916e-13},
    {594.0, 999.8380, 9.191440e-08, 1.316174e-13},
    {596.0, 999.8432, 8.980045e-08, 1.278742e-13},
    {598.0, 999.8482, 8.772230e-08, 1.242022e-13},
    {600.0, 999.8530, 8.570928e-08, 1.206530e-13},
    {602.0, 999.8577, 8.376012e-08, 1.172240e-13},
    {604.0, 999.8623, 8.187246e-08, 1.139106e-13},
    {606.0, 999.8667, 8.004406e-08, 1.107086e-13},
    {608.0, 999.8709, 7.826726e-08, 1.076041e-13},
    {610.0, 999.8750, 7.652424e-08, 1.045658e-13},
    {612.0, 999.8790, 7.483583e-08, 1.016297e-13},
    {614.0, 999.8829, 7.320004e-08, 9.879214e-14},
    {616.0, 999.8866, 7.161496e-08, 9.604932e-14},
    {618.0, 999.8902, 7.007874e-08, 9.339773e-14},
    {620.0, 999.8937, 6.858217e-08, 9.082120e-14},
    {622.0, 999.8971, 6.711613e-08, 8.830379e-14},
    {624.0, 999.9004, 6.569517e-08, 8.587030e-14},
    {626.0, 999.9035, 6.431767e-08, 8.351761e-14},
    {628.0, 999.9066, 6.298206e-08, 8.124273e-14},
    {630.0, 999.9096, 6.168686e-08, 7.904277e-14},
    {632.0, 999.9124, 6.042417e-08, 7.690413e-14},
    {634.0, 999.9152, 5.918669e-08, 7.481421e-14},
    {636.0, 999.9179, 5.798653e-08, 7.279328e-14},
    {638.0, 999.9205, 5.682234e-08, 7.083879e-14},
    {640.0, 999.9230, 5.569286e-08, 6.894830e-14},
    {642.0, 999.9254, 5.459686e-08, 6.711947e-14},
    {644.0, 999.9278, 5.352950e-08, 6.534398e-14},
    {646.0, 999.9301, 5.248102e-08, 6.360546e-14},
    {648.0, 999.9323, 5.146351e-08, 6.192376e-14},
    {650.0, 999.9344, 5.047586e-08, 6.029679e-14},
    {652.0, 999.9365, 4.951703e-08, 5.872256e-14},
    {654.0, 999.9385, 4.858601e-08, 5.719915e-14},
    {656.0, 999.9404, 4.768183e-08, 5.572474e-14},
    {658.0, 999.9423, 4.679003e-08, 5.427560e-14},
    {660.0, 999.9441, 4.592392e-08, 5.287324e-14},
    {662.0, 999.9459, 4.508268e-08, 5.151606e-14},
    {664.0, 999.9476, 4.426542e-08, 5.020242e-14},
    {666.0, 999.9492, 4.347133e-08, 4.893075e-14},
    {668.0, 999.9508, 4.269960e-08, 4.769955e-14},
    {670.0, 999.9523, 4.194197e-08, 4.649546e-14},
    {672.0, 999.9538, 4.120165e-08, 4.532349e-14},
    {674.0, 999.9553, 4.048207e-08, 4.418888e-14},
    {676.0, 999.9567, 3.978253e-08, 4.309027e-14},
    {678.0, 999.9580, 3.910232e-08, 4.202639e-14},
    {680.0, 999.9594, 3.844081e-08, 4.099600e-14},
    {682.0, 999.9606, 3.779556e-08, 3.999514e-14},
    {684.0, 999.9619, 3.715998e-08, 3.901346e-14},
    {686.0, 999.9630, 3.654175e-08, 3.806272e-14},
    {688.0, 999.9642, 3.594029e-08, 3.714182e-14},
    {690.0, 999.9653, 3.535502e-08, 3.624969e-14},
    {692.0, 999.9664, 3.478542e-08, 3.538533e-14},
    {694.0, 999.9674, 3.423095e-08, 3.454775e-14},
    {696.0, 999.9685, 3.368627e-08, 3.372874e-14},
    {698.0, 999.9694, 3.315266e-08, 3.293014e-14},
    {700.0, 999.9704, 3.263312e-08, 3.215630e-14},
    {702.0, 999.9713, 3.212719e-08, 3.140635e-14},
    {704.0, 999.9722, 3.163442e-08, 3.067946e-14},
    {706.0, 999.9731, 3.115437e-08, 2.997482e-14},
    {708.0, 999.9739, 3.068664e-08, 2.929166e-14},
    {710.0, 999.9747, 3.022480e-08, 2.862051e-14},
    {712.0, 999.9755, 2.977385e-08, 2.796855e-14},
    {714.0, 999.9763, 2.933437e-08, 2.733647e-14},
    {716.0, 999.9770, 2.890599e-08, 2.672358e-14},
    {718.0, 999.9777, 2.848834e-08, 2.612920e-14},
    {720.0, 999.9784, 2.808108e-08, 2.555270e-14},
    {722.0, 999.9791, 2.768379e-08, 2.499334e-14},
    {724.0, 999.9797, 2.729043e-08, 2.444256e-14},
    {726.0, 999.9803, 2.690676e-08, 2.390833e-14},
    {728.0, 999.9809, 2.653248e-08, 2.339010e-14},
    {730.0, 999.9815, 2.616728e-08, 2.288731e-14},
    {732.0, 999.9821, 2.581087e-08, 2.239943e-14},
    {734.0, 999.9826, 2.546298e-08, 2.192595e-14},
    {736.0, 999.9832, 2.512319e-08, 2.146618e-14},
    {738.0, 999.9837, 2.478653e-08, 2.101332e-14},
    {740.0, 999.9842, 2.445783e-08, 2.057382e-14},
    {742.0, 999.9847, 2.413685e-08, 2.014722e-14},
    {744.0, 999.9852, 2.382333e-08, 1.973308e-14},
    {746.0, 999.9856, 2.351706e-08, 1.933098e-14},
    {748.0, 999.9861, 2.321780e-08, 1.894051e-14},
    {750.0, 999.9865, 2.292535e-08, 1.856128e-14},
    {752.0, 999.9869, 2.263557e-08, 1.818787e-14},
    {754.0, 999.9873, 2.235196e-08, 1.782475e-14},
    {756.0, 999.9877, 2.207473e-08, 1.747206e-14},
    {758.0, 999.9881, 2.180368e-08, 1.712946e-14},
    {760.0, 999.9884, 2.153862e-08, 1.679661e-14},
    {762.0, 999.9888, 2.127937e-08, 1.647317e-14},
    {764.0, 999.9891, 2.102575e-08, 1.615884e-14},
    {766.0, 999.9895, 2.077517e-08, 1.585033e-14},
    {768.0, 999.9898, 2.052873e-08, 1.554895e-14},
    {770.0, 999.9901, 2.028759e-08, 1.525603e-14},
    {772.0, 999.9904, 2.005157e-08, 1.497129e-14},
    {774.0, 999.9907, 1.982054e-08, 1.469447e-14},
    {776.0, 999.9910, 1.959435e-08, 1.442529e-14},
    {778.0, 999.9912, 1.937285e-08, 1.416351e-14},
    {780.0, 999.9915, 1.915509e-08, 1.390792e-14},
    {782.0, 999.9918, 1.893942e-08, 1.365656e-14},
    {784.0, 999.9920, 1.872817e-08, 1.341208e-14},
    {786.0, 999.9923, 1.852121e-08, 1.317426e-14},
    {788.0, 999.9925, 1.831842e-08, 1.294289e-14},
    {790.0, 999.9927, 1.811967e-08, 1.271774e-14},
    {792.0, 999.9929, 1.792487e-08, 1.249863e-14},
    {794.0, 999.9932, 1.773388e-08, 1.228535e-14},
    {796.0, 999.9934, 1.754462e-08, 1.207551e-14},
    {798.0, 999.9936, 1.735827e-08, 1.187040e-14},
    {800.0, 999.9938, 1.717552e-08, 1.167072e-14},
    {802.0, 999.9940, 1.699628e-08, 1.147630e-14},
    {804.0, 999.9941, 1.682045e-08, 1.128698e-14},
    {806.0, 999.9943, 1.664794e-08, 1.110259e-14},
    {808.0, 999.9945, 1.647865e-08, 1.092297e-14},
    {810.0, 999.9946, 1.631243e-08, 1.074789e-14},
    {812.0, 999.9948, 1.614692e-08, 1.057485e-14},
    {814.0, 999.9950, 1.598446e-08, 1.040626e-14},
    {816.0, 999.9951, 1.582496e-08, 1.024199e-14},
    {818.0, 999.9953, 1.566836e-08, 1.008189e-14},
    {820.0, 999.9954, 1.551457e-08, 9.925832e-15},
    {822.0, 999.9955, 1.536352e-08, 9.773694e-15},
    {824.0, 999.9957, 1.521513e-08, 9.625350e-15},
    {826.0, 999.9958, 1.506893e-08, 9.480270e-15},
    {828.0, 999.9959, 1.492355e-08, 9.337098e-15},
    {830.0, 999.9961, 1.478071e-08, 9.197473e-15},
    {832.0, 999.9962, 1.464034e-08, 9.061285e-15},
    {834.0, 999.9963, 1.450236e-08, 8.928427e-15},
    {836.0, 999.9964, 1.436672e-08, 8.798795e-15},
    {838.0, 999.9965, 1.423337e-08, 8.672290e-15},
    {840.0, 999.9966, 1.410223e-08, 8.548815e-15},
    {842.0, 999.9967, 1.397287e-08, 8.427916e-15},
    {844.0, 999.9968, 1.384415e-08, 8.308515e-15},
    {846.0, 999.9969, 1.371755e-08, 8.191952e-15},
    {848.0, 999.9970, 1.359301e-08, 8.078142e-15},
    {850.0, 999.9971, 1.347048e-08, 7.967000e-15},
    {852.0, 999.9972, 1.334991e-08, 7.858446e-15},
    {854.0, 999.9973, 1.323126e-08, 7.752400e-15},
    {856.0, 999.9973, 1.311447e-08, 7.648789e-15},
    {858.0, 999.9974, 1.299940e-08, 7.547443e-15},
    {860.0, 999.9975, 1.288456e-08, 7.447044e-15},
    {862.0, 999.9976, 1.277151e-08, 7.348929e-15},
    {864.0, 999.9976, 1.266019e-08, 7.253030e-15},
    {866.0, 999.9977, 1.255058e-08, 7.159280e-15},
    {868.0, 999.9978, 1.244263e-08, 7.067617e-15},
    {870.0, 999.9978, 1.233629e-08, 6.977979e-15},
    {872.0, 999.9979, 1.223154e-08, 6.890305e-15},
    {874.0, 999.9980, 1.212834e-08, 6.804540e-15},
    {876.0, 999.9980, 1.202552e-08, 6.719695e-15},
    {878.0, 999.9981, 1.192386e-08, 6.636408e-15},
    {880.0, 999.9981, 1.182368e-08, 6.554915e-15},
    {882.0, 999.9982, 1.172496e-08, 6.475165e-15},
    {884.0, 999.9983, 1.162765e-08, 6.397106e-15},
    {886.0, 999.9983, 1.153173e-08, 6.320691e-15},
    {888.0, 999.9984, 1.143716e-08, 6.245872e-15},
    {890.0, 999.9984, 1.134391e-08, 6.172603e-15},
    {892.0, 999.9985, 1.125156e-08, 6.100524e-15},
    {894.0, 999.9985, 1.115957e-08, 6.029219e-15},
    {896.0, 999.9985, 1.106885e-08, 5.959376e-15},
    {898.0, 999.9986, 1.097938e-08, 5.890953e-15},
    {900.0, 999.9986, 1.089113e-08, 5.823911e-15},
    {902.0, 999.9987, 1.080408e-08, 5.758210e-15},
    {904.0, 999.9987, 1.071819e-08, 5.693815e-15},
    {906.0, 999.9987, 1.063345e-08, 5.630688e-15},
    {908.0, 999.9988, 1.054982e-08, 5.568795e-15},
    {910.0, 999.9988, 1.046649e-08, 5.507506e-15},
    {912.0, 999.9989, 1.038387e-08, 5.447136e-15},
    {914.0, 999.9989, 1.030234e-08, 5.387932e-15},
    {916.0, 999.9989, 1.022186e-08, 5.329862e-15},
    {918.0, 999.9990, 1.014243e-08, 5.272896e-15},
    {920.0, 999.9990, 1.006401e-08, 5.217003e-15},
    {922.0, 999.9990, 9.986581e-09, 5.162154e-15},
    {924.0, 999.9990, 9.910133e-09, 5.108323e-15},
    {926.0, 999.9991, 9.834642e-09, 5.055482e-15},
    {928.0, 999.9991, 9.759137e-09, 5.002943e-15},
    {930.0, 999.9991, 9.684463e-09, 4.951287e-15},
    {932.0, 999.9991, 9.610715e-09, 4.900570e-15},
    {934.0, 999.9992, 9.537875e-09, 4.850766e-15},
    {936.0, 999.9992, 9.465928e-09, 4.801852e-15},
    {938.0, 999.9992, 9.394855e-09, 4.753805e-15},
    {940.0, 999.9992, 9.324641e-09, 4.706602e-15},
    {942.0, 999.9993, 9.255268e-09, 4.660222e-15},
    {944.0, 999.9993, 9.186723e-09, 4.614643e-15},
    {946.0, 999.9993, 9.118089e-09, 4.569252e-15},
    {948.0, 999.9993, 9.050207e-09, 4.524600e-15},
    {950.0, 999.9993, 8.983128e-09, 4.480710e-15},
    {952.0, 999.9994, 8.916838e-09, 4.437562e-15},
    {954.0, 999.9994, 8.851321e-09, 4.395139e-15},
    {956.0, 999.9994, 8.786564e-09, 4.353423e-15},
    {958.0, 999.9994, 8.722553e-09, 4.312395e-15},
    {960.0, 999.9994, 8.659276e-09, 4.272039e-15},
    {962.0, 999.9995, 8.596720e-09, 4.232338e-15},
    {964.0, 999.9995, 8.534171e-09, 4.192835e-15},
    {966.0, 999.9995, 8.472159e-09, 4.153861e-15},
    {968.0, 999.9995, 8.410849e-09, 4.115512e-15},
    {970.0, 999.9995, 8.350228e-09, 4.077773e-15},
    {972.0, 999.9995, 8.290285e-09, 4.040630e-15},
    {974.0, 999.9995, 8.231008e-09, 4.004067e-15},
    {976.0, 999.9996, 8.172386e-09, 3.968072e-15},
    {978.0, 999.9996, 8.114409e-09, 3.932631e-15},
    {980.0, 999.9996, 8.057065e-09, 3.897731e-15},
    {982.0, 999.9996, 7.999953e-09, 3.863124e-15},
    {984.0, 999.9996, 7.943059e-09, 3.828797e-15},
    {986.0, 999.9996, 7.886784e-09, 3.794987e-15},
    {988.0, 999.9996, 7.831117e-09, 3.761684e-15},
    {990.0, 999.9996, 7.776048e-09, 3.728875e-15},
    {992.0, 999.9996, 7.721569e-09, 3.696548e-15},
    {994.0, 999.9997, 7.667669e-09, 3.664694e-15},
    {996.0, 999.9997, 7.614340e-09, 3.633302e-15},
    {998.0, 999.9997, 7.561572e-09, 3.602361e-15},
    {1000.0, 999.9997, 7.509357e-09, 3.571862e-15},
}};

}  // namespace desurv::detail
