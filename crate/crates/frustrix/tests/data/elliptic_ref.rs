// Generated by tools/oracles/elliptic_ref.py; do not edit by hand.
#[allow(unused)]
use num_complex::Complex64 as C;
const fn c(re: f64, im: f64) -> C { C::new(re, im) }
// (m, n, z, tau, expected) rows; z and tau as (re, im) pairs
pub const THETA_REF: &[(usize, usize, C, C, C)] = &[
    (0, 0, c(0.1700000000000000122125, 0.0), c(0.0, 0.8000000000000000444089), c(1.078000455389491538113, 0.0)),
    (0, 1, c(0.1700000000000000122125, 0.0), c(0.0, 0.8000000000000000444089), c(0.921907270453450447297, 0.0)),
    (1, 0, c(0.1700000000000000122125, 0.0), c(0.0, 0.8000000000000000444089), c(0.9181710703468135212165, 0.0)),
    (1, 1, c(0.1700000000000000122125, 0.0), c(0.0, 0.8000000000000000444089), c(-0.5361377789020468339347, 0.0)),
    (0, 0, c(-0.3300000000000000155431, 0.2099999999999999922284), c(0.0, 0.8000000000000000444089), c(0.843242319926037532887, 0.2461002046144043038457)),
    (0, 1, c(-0.3300000000000000155431, 0.2099999999999999922284), c(0.0, 0.8000000000000000444089), c(1.156108542258216206396, -0.2471126951253864865256)),
    (1, 0, c(-0.3300000000000000155431, 0.2099999999999999922284), c(0.0, 0.8000000000000000444089), c(0.6398829066437154186104, 0.6515902692435359919737)),
    (1, 1, c(-0.3300000000000000155431, 0.2099999999999999922284), c(0.0, 0.8000000000000000444089), c(1.124796628584763027481, -0.4097284528108755895934)),
    (0, 0, c(0.4500000000000000111022, -0.1199999999999999955591), c(0.0, 0.8000000000000000444089), c(0.8001791912588280945913, 0.04131683229948376251253)),
    (0, 1, c(0.4500000000000000111022, -0.1199999999999999955591), c(0.0, 0.8000000000000000444089), c(1.200150919416000738737, -0.04153426526064486687994)),
    (1, 0, c(0.4500000000000000111022, -0.1199999999999999955591), c(0.0, 0.8000000000000000444089), c(0.173477499416360283076, 0.3981087117393765839278)),
    (1, 1, c(0.4500000000000000111022, -0.1199999999999999955591), c(0.0, 0.8000000000000000444089), c(-1.14028989446011480453, 0.06883753764733555042225)),
    (0, 0, c(2.299999999999999822364, 1.899999999999999911182), c(0.0, 0.8000000000000000444089), c(-383503.0871060921674101, 894570.1277868274912963)),
    (0, 1, c(2.299999999999999822364, 1.899999999999999911182), c(0.0, 0.8000000000000000444089), c(-1245542.250855285423668, 286268.0699711449312699)),
    (1, 0, c(2.299999999999999822364, 1.899999999999999911182), c(0.0, 0.8000000000000000444089), c(-142388.0686197675955219, 1296086.066061137627459)),
    (1, 1, c(2.299999999999999822364, 1.899999999999999911182), c(0.0, 0.8000000000000000444089), c(1462370.378063881429286, -142613.4939781939581506)),
    (0, 0, c(-1.699999999999999955591, -2.399999999999999911182), c(0.0, 0.8000000000000000444089), c(5118357804.7533701804, -3718704618.701478141959)),
    (0, 1, c(-1.699999999999999955591, -2.399999999999999911182), c(0.0, 0.8000000000000000444089), c(-5657879188.507654507883, 4110689848.767262091167)),
    (1, 0, c(-1.699999999999999955591, -2.399999999999999911182), c(0.0, 0.8000000000000000444089), c(3343531519.650244483705, -2429217842.752295312411)),
    (1, 1, c(-1.699999999999999955591, -2.399999999999999911182), c(0.0, 0.8000000000000000444089), c(4639698902.445994025158, -3370938569.766801128457)),
    (0, 0, c(0.08000000000000000166533, 3.100000000000000088818), c(0.0, 0.8000000000000000444089), c(-10637143544296292.30528, -25509418411854256.61011)),
    (0, 1, c(0.08000000000000000166533, 3.100000000000000088818), c(0.0, 0.8000000000000000444089), c(-9438084919085354.496904, -17165613374449563.34973)),
    (1, 0, c(0.08000000000000000166533, 3.100000000000000088818), c(0.0, 0.8000000000000000444089), c(-9047894571330572.215398, -24209241778682261.28103)),
    (1, 1, c(0.08000000000000000166533, 3.100000000000000088818), c(0.0, 0.8000000000000000444089), c(9647974483311217.83098, 2534026832877016.27787)),
    (0, 0, c(0.1700000000000000122125, 0.0), c(0.0, 1.300000000000000044409), c(1.016224206481818517736, 0.0)),
    (0, 1, c(0.1700000000000000122125, 0.0), c(0.0, 1.300000000000000044409), c(0.9837756212014775598047, 0.0)),
    (1, 0, c(0.1700000000000000122125, 0.0), c(0.0, 1.300000000000000044409), c(0.6201206526142579050049, 0.0)),
    (1, 1, c(0.1700000000000000122125, 0.0), c(0.0, 1.300000000000000044409), c(-0.366537945673526668593, 0.0)),
    (0, 0, c(-0.3300000000000000155431, 0.2099999999999999922284), c(0.0, 1.300000000000000044409), c(0.9674801433777322373044, 0.05126349904289716784864)),
    (0, 1, c(-0.3300000000000000155431, 0.2099999999999999922284), c(0.0, 1.300000000000000044409), c(1.032518644394571871612, -0.05126538981094282710824)),
    (1, 0, c(-0.3300000000000000155431, 0.2099999999999999922284), c(0.0, 1.300000000000000044409), c(0.4487385461915230070434, 0.4394727324587319514359)),
    (1, 1, c(-0.3300000000000000155431, 0.2099999999999999922284), c(0.0, 1.300000000000000044409), c(0.7600249200428576682871, -0.2606146992547785382979)),
    (0, 0, c(0.4500000000000000111022, -0.1199999999999999955591), c(0.0, 1.300000000000000044409), c(0.9584273317086481586842, 0.008611322268883082728007)),
    (0, 1, c(0.4500000000000000111022, -0.1199999999999999955591), c(0.0, 1.300000000000000044409), c(1.041573284754132209559, -0.008611728312486036529341)),
    (1, 0, c(0.4500000000000000111022, -0.1199999999999999955591), c(0.0, 1.300000000000000044409), c(0.1206497471504987749263, 0.2744087362261883660303)),
    (1, 1, c(0.4500000000000000111022, -0.1199999999999999955591), c(0.0, 1.300000000000000044409), c(-0.7630655939937779569337, 0.04363081097433428503525)),
    (0, 0, c(2.299999999999999822364, 1.899999999999999911182), c(0.0, 1.300000000000000044409), c(-2316.865481113088763239, -1343.749016053647535043)),
    (0, 1, c(2.299999999999999822364, 1.899999999999999911182), c(0.0, 1.300000000000000044409), c(-725.4586450951908063457, 3555.579962743462546886)),
    (1, 0, c(2.299999999999999822364, 1.899999999999999911182), c(0.0, 1.300000000000000044409), c(-5729.519682830185803223, -1927.362155685120295406)),
    (1, 1, c(2.299999999999999822364, 1.899999999999999911182), c(0.0, 1.300000000000000044409), c(1849.721370905966986876, -5895.150612020166489925)),
    (0, 0, c(-1.699999999999999955591, -2.399999999999999911182), c(0.0, 1.300000000000000044409), c(-829618.1304630989925491, -538354.4150874945383246)),
    (0, 1, c(-1.699999999999999955591, -2.399999999999999911182), c(0.0, 1.300000000000000044409), c(-800590.0317865444342319, -646062.5878390910690553)),
    (1, 0, c(-1.699999999999999955591, -2.399999999999999911182), c(0.0, 1.300000000000000044409), c(-646603.0818561914622649, 17157.86570730915287323)),
    (1, 1, c(-1.699999999999999955591, -2.399999999999999911182), c(0.0, 1.300000000000000044409), c(403308.486175213206244, 647399.8456942281159513)),
    (0, 0, c(0.08000000000000000166533, 3.100000000000000088818), c(0.0, 1.300000000000000044409), c(3735987122.390263364499, -8216512344.071231587745)),
    (0, 1, c(0.08000000000000000166533, 3.100000000000000088818), c(0.0, 1.300000000000000044409), c(3401565339.360864917105, -3031374365.331627506931)),
    (1, 0, c(0.08000000000000000166533, 3.100000000000000088818), c(0.0, 1.300000000000000044409), c(3916031357.183904064468, -11392778198.97742988239)),
    (1, 1, c(0.08000000000000000166533, 3.100000000000000088818), c(0.0, 1.300000000000000044409), c(-10561137651.50593150146, -3217238913.148256428592)),
    (0, 0, c(0.1700000000000000122125, 0.0), c(0.0, 2.5), c(1.000374036639555215736, 0.0)),
    (0, 1, c(0.1700000000000000122125, 0.0), c(0.0, 2.5), c(0.9996259633603961075917, 0.0)),
    (1, 0, c(0.1700000000000000122125, 0.0), c(0.0, 2.5), c(0.2416394177991883579704, 0.0)),
    (1, 1, c(0.1700000000000000122125, 0.0), c(0.0, 2.5), c(-0.1429051118192762343418, 0.0)),
    (0, 0, c(-0.3300000000000000155431, 0.2099999999999999922284), c(0.0, 2.5), c(0.999250297596674323113, 0.001181856179760300541695)),
    (0, 1, c(-0.3300000000000000155431, 0.2099999999999999922284), c(0.0, 2.5), c(1.000749702402983242237, -0.001181856180294411828554)),
    (1, 0, c(-0.3300000000000000155431, 0.2099999999999999922284), c(0.0, 2.5), c(0.1751492047933001110129, 0.1712365749566594276924)),
    (1, 1, c(-0.3300000000000000155431, 0.2099999999999999922284), c(0.0, 2.5), c(0.2961613900586102332693, -0.1012691754297179392039)),
    (0, 0, c(0.4500000000000000111022, -0.1199999999999999955591), c(0.0, 2.5), c(0.9990415719945797504603, 0.0001985310578333678799507)),
    (0, 1, c(0.4500000000000000111022, -0.1199999999999999955591), c(0.0, 2.5), c(1.00095842800559439027, -0.0001985310579480686079391)),
    (1, 0, c(0.4500000000000000111022, -0.1199999999999999955591), c(0.0, 2.5), c(0.04707430576852376120918, 0.1070248096314642602151)),
    (1, 1, c(0.4500000000000000111022, -0.1199999999999999955591), c(0.0, 2.5), c(-0.2972157412875152583724, 0.01695109952001954609306)),
    (0, 0, c(2.299999999999999822364, 1.899999999999999911182), c(0.0, 2.5), c(-17.35193235454155208617, -56.47980431385020404234)),
    (0, 1, c(2.299999999999999822364, 1.899999999999999911182), c(0.0, 2.5), c(19.35107238238346308909, 56.48042912019595624521)),
    (1, 0, c(2.299999999999999822364, 1.899999999999999911182), c(0.0, 2.5), c(31.06643391606576351058, -44.80663086863954668624)),
    (1, 1, c(2.299999999999999822364, 1.899999999999999911182), c(0.0, 2.5), c(-44.02497052915072835251, -33.47350233663918729828)),
    (0, 0, c(-1.699999999999999955591, -2.399999999999999911182), c(0.0, 2.5), c(-423.8967295975140501744, 1306.821731575633030369)),
    (0, 1, c(-1.699999999999999955591, -2.399999999999999911182), c(0.0, 2.5), c(425.4362216828737693646, -1307.156310160102257322)),
    (1, 0, c(-1.699999999999999955591, -2.399999999999999911182), c(0.0, 2.5), c(21.23575909855232275014, 257.1997992594760416488)),
    (1, 1, c(-1.699999999999999955591, -2.399999999999999911182), c(0.0, 2.5), c(-170.1225873667455964914, 289.2321444140302463756)),
    (0, 0, c(0.08000000000000000166533, 3.100000000000000088818), c(0.0, 2.5), c(98924.02131946445348852, -55417.75224360308567674)),
    (0, 1, c(0.08000000000000000166533, 3.100000000000000088818), c(0.0, 2.5), c(-96905.70960936088875453, 52240.55338137766220243)),
    (1, 0, c(0.08000000000000000166533, 3.100000000000000088818), c(0.0, 2.5), c(77606.26125761699737291, -71303.78316310178936449)),
    (1, 1, c(0.08000000000000000166533, 3.100000000000000088818), c(0.0, 2.5), c(70118.04098350326550485, 72992.68534036000693425)),
    (0, 0, c(0.1700000000000000122125, 0.0), c(0.5, 0.9000000000000000222045), c(0.999986868947149001522, 0.05700544136697798226713)),
    (0, 1, c(0.1700000000000000122125, 0.0), c(0.5, 0.9000000000000000222045), c(0.999986868947149001522, -0.05700544136697798226713)),
    (1, 0, c(0.1700000000000000122125, 0.0), c(0.5, 0.9000000000000000222045), c(0.7844931633465610628187, 0.324947707847117413344)),
    (1, 1, c(0.1700000000000000122125, 0.0), c(0.5, 0.9000000000000000222045), c(-0.4670770390329438608006, -0.1934696442405128426004)),
    (0, 0, c(-0.3300000000000000155431, 0.2099999999999999922284), c(0.5, 0.9000000000000000222045), c(0.8197856096451282177883, -0.1144032528654527934926)),
    (0, 1, c(-0.3300000000000000155431, 0.2099999999999999922284), c(0.5, 0.9000000000000000222045), c(1.180029639537570250778, 0.1141150884034897527423)),
    (1, 0, c(-0.3300000000000000155431, 0.2099999999999999922284), c(0.5, 0.9000000000000000222045), c(0.3502186573912475122355, 0.7958751829946341300079)),
    (1, 1, c(-0.3300000000000000155431, 0.2099999999999999922284), c(0.5, 0.9000000000000000222045), c(1.093226054910514557118, 0.08095382467186923866225)),
    (0, 0, c(0.4500000000000000111022, -0.1199999999999999955591), c(0.5, 0.9000000000000000222045), c(0.9697896447914340138763, -0.1461011544676401150912)),
    (0, 1, c(0.4500000000000000111022, -0.1199999999999999955591), c(0.5, 0.9000000000000000222045), c(1.030304307856979356782, 0.1460392709718578895602)),
    (1, 0, c(0.4500000000000000111022, -0.1199999999999999955591), c(0.5, 0.9000000000000000222045), c(0.009748060142025882048999, 0.4156833829168973013245)),
    (1, 1, c(0.4500000000000000111022, -0.1199999999999999955591), c(0.5, 0.9000000000000000222045), c(-0.9818979654083965667756, -0.344604259317796649755)),
    (0, 0, c(2.299999999999999822364, 1.899999999999999911182), c(0.5, 0.9000000000000000222045), c(-242066.1699714300979468, 191467.1921195163584518)),
    (0, 1, c(2.299999999999999822364, 1.899999999999999911182), c(0.5, 0.9000000000000000222045), c(-221897.5711972640811087, 145605.7116294618278654)),
    (1, 0, c(2.299999999999999822364, 1.899999999999999911182), c(0.5, 0.9000000000000000222045), c(154074.3758290206332863, -111800.7296801904956155)),
    (1, 1, c(2.299999999999999822364, 1.899999999999999911182), c(0.5, 0.9000000000000000222045), c(-246170.7346074132427804, 5552.327116559638652876)),
    (0, 0, c(-1.699999999999999955591, -2.399999999999999911182), c(0.5, 0.9000000000000000222045), c(108295085.8746482599381, 231853387.0109519387769)),
    (0, 1, c(-1.699999999999999955591, -2.399999999999999911182), c(0.5, 0.9000000000000000222045), c(-354561095.7925034983969, -405632158.4400343611114)),
    (1, 0, c(-1.699999999999999955591, -2.399999999999999911182), c(0.5, 0.9000000000000000222045), c(-121855153.4134840117129, 510909691.8141851940166)),
    (1, 1, c(-1.699999999999999955591, -2.399999999999999911182), c(0.5, 0.9000000000000000222045), c(-410738696.985413635844, -259954143.9821701896191)),
    (0, 0, c(0.08000000000000000166533, 3.100000000000000088818), c(0.5, 0.9000000000000000222045), c(146299361745659.0949687, -127861658221935.6164724)),
    (0, 1, c(0.08000000000000000166533, 3.100000000000000088818), c(0.5, 0.9000000000000000222045), c(-276954847592332.1943281, -153821319978696.3907426)),
    (1, 0, c(0.08000000000000000166533, 3.100000000000000088818), c(0.5, 0.9000000000000000222045), c(50452664299481.83817957, -351964963081444.9305898)),
    (1, 1, c(0.08000000000000000166533, 3.100000000000000088818), c(0.5, 0.9000000000000000222045), c(366860538916081.7215268, 98398540667799.37202631)),
    (0, 0, c(0.1700000000000000122125, 0.0), c(0.5, 1.699999999999999955591), c(0.9999999994346788717623, 0.004617588519269083955194)),
    (0, 1, c(0.1700000000000000122125, 0.0), c(0.5, 1.699999999999999955591), c(0.9999999994346788717623, -0.004617588519269083955194)),
    (1, 0, c(0.1700000000000000122125, 0.0), c(0.5, 1.699999999999999955591), c(0.418464637587163603848, 0.173333728262145206209)),
    (1, 1, c(0.1700000000000000122125, 0.0), c(0.5, 1.699999999999999955591), c(-0.2474902500615463087699, -0.1025138181306012027082)),
    (0, 0, c(-0.3300000000000000155431, 0.2099999999999999922284), c(0.5, 1.699999999999999955591), c(0.9854096459053114567812, -0.009255295239894499320621)),
    (0, 1, c(-0.3300000000000000155431, 0.2099999999999999922284), c(0.5, 1.699999999999999955591), c(1.014590346140753572057, 0.009255282833771349601477)),
    (1, 0, c(-0.3300000000000000155431, 0.2099999999999999922284), c(0.5, 1.699999999999999955591), c(0.1805283828739722794027, 0.422197149618417022215)),
    (1, 1, c(-0.3300000000000000155431, 0.2099999999999999922284), c(0.5, 1.699999999999999955591), c(0.5855114121163651004184, 0.03710879208133651093692)),
    (0, 0, c(0.4500000000000000111022, -0.1199999999999999955591), c(0.5, 1.699999999999999955591), c(0.9975490797420274265608, -0.01183206719536819663797)),
    (0, 1, c(0.4500000000000000111022, -0.1199999999999999955591), c(0.5, 1.699999999999999955591), c(1.002450924302843750538, 0.01183206453114560520735)),
    (1, 0, c(0.4500000000000000111022, -0.1199999999999999955591), c(0.5, 1.699999999999999955591), c(0.004753529508848970585194, 0.2191275386550760073672)),
    (1, 1, c(0.4500000000000000111022, -0.1199999999999999955591), c(0.5, 1.699999999999999955591), c(-0.526849137183882889568, -0.1838443263732726040217)),
    (0, 0, c(2.299999999999999822364, 1.899999999999999911182), c(0.5, 1.699999999999999955591), c(688.275530476497836288, -219.2981277518316680971)),
    (0, 1, c(2.299999999999999822364, 1.899999999999999911182), c(0.5, 1.699999999999999955591), c(-706.2506194908712097981, 233.8108794214665432082)),
    (1, 0, c(2.299999999999999822364, 1.899999999999999911182), c(0.5, 1.699999999999999955591), c(362.7044152176035176585, 181.031780919273470492)),
    (1, 1, c(2.299999999999999822364, 1.899999999999999911182), c(0.5, 1.699999999999999955591), c(-288.6257438132753826296, 187.192676168107403887)),
    (0, 0, c(-1.699999999999999955591, -2.399999999999999911182), c(0.5, 1.699999999999999955591), c(-21482.36253476783475172, -9128.309065033468214139)),
    (0, 1, c(-1.699999999999999955591, -2.399999999999999911182), c(0.5, 1.699999999999999955591), c(10787.86904920652504654, 1356.851647240888632425)),
    (1, 0, c(-1.699999999999999955591, -2.399999999999999911182), c(0.5, 1.699999999999999955591), c(40213.12204868994640601, 3708.818903838218679072)),
    (1, 1, c(-1.699999999999999955591, -2.399999999999999911182), c(0.5, 1.699999999999999955591), c(2607.200833979986624731, -40039.51990472394738138)),
    (0, 0, c(0.08000000000000000166533, 3.100000000000000088818), c(0.5, 1.699999999999999955591), c(24113316.11527135979125, -35688567.99758293372982)),
    (0, 1, c(0.08000000000000000166533, 3.100000000000000088818), c(0.5, 1.699999999999999955591), c(22720767.09400052165302, -38110135.24320024632119)),
    (1, 0, c(0.08000000000000000166533, 3.100000000000000088818), c(0.5, 1.699999999999999955591), c(-30509886.88139595678787, 13838511.60428247935976)),
    (1, 1, c(0.08000000000000000166533, 3.100000000000000088818), c(0.5, 1.699999999999999955591), c(-7023126.493517290363795, -24698911.03207648757659)),
];

// (tau, k, kp, K) with tau on the positive imaginary axis
pub const MODULUS_REF: &[(C, C, C, C)] = &[
    (c(0.0, 0.5), c(0.9851714310094160386895, 0.0), c(0.1715728752538099023966, 0.0), c(3.165103454447431823666, 0.0)),
    (c(0.0, 0.8), c(0.854102047529444308823, 0.0), c(0.5201054627727061807381, 0.0), c(2.12129158215069656223, 0.0)),
    (c(0.0, 1.0), c(0.7071067811865475244008, 0.0), c(0.7071067811865475244008, 0.0), c(1.854074677301371918434, 0.0)),
    (c(0.0, 1.3), c(0.4860615761222951627718, 0.0), c(0.8739245643747006296167, 0.0), c(1.678379616251515362851, 0.0)),
    (c(0.0, 2.0), c(0.1715728752538099023966, 0.0), c(0.9851714310094160386895, 0.0), c(1.582551727223715911833, 0.0)),
    (c(0.0, 3.5), c(0.01638220025133397044663, 0.0), c(0.9998658027530120470249, 0.0), c(1.570901733907143112216, 0.0)),
];

// (tau, u, sn, cn, dn) at the hatted argument u
pub const JACOBI_REF: &[(C, C, C, C, C)] = &[
    (c(0.0, 0.7), c(0.8680379488286277746701, 0.0), c(0.7109582958953734515566, 0.0), c(0.7032341725894345424649, 0.0), c(0.7601117937701396432766, 0.0)),
    (c(0.0, 0.7), c(3.307928399590176114283, 0.0), c(0.9044360670855968439504, 0.0), c(-0.4266091894869797166692, 0.0), c(0.5627537499937395563112, 0.0)),
    (c(0.0, 0.7), c(-1.454550076415538433231, 0.0), c(-0.9203141133730867053281, 0.0), c(0.3911801793627960776062, 0.0), c(0.5408227243479959919284, 0.0)),
    (c(0.0, 0.7), c(0.7038145531042927642267, 0.9384194041390571057901), c(1.025205203459918581651, 0.5566813420325240699167), c(0.8453567409562006026458, -0.6751145177777247700263), c(0.8389357043357379252472, -0.5682634019880707958034)),
    (c(0.0, 0.7), c(1.173024255173821317122, 0.0), c(0.84341234822831463122, 0.0), c(0.5372667967183530852629, 0.0), c(0.637015568774804220197, 0.0)),
    (c(0.0, 0.7), c(0.7820161701158808780812, 0.0), c(0.6623342411048452973583, 0.0), c(0.7492084843753897706473, 0.0), c(0.7959582306071344244649, 0.0)),
    (c(0.0, 0.7), c(1.564032340231761756162, 0.0), c(0.9412660810152245429786, 0.0), c(0.3376657588951547026417, 0.0), c(0.5098117203360823092736, 0.0)),
    (c(0.0, 1.0), c(0.6860076306015076098205, 0.0), c(0.6144649886744409051799, 0.0), c(0.7889440903469137527912, 0.0), c(0.900675518067777617255, 0.0)),
    (c(0.0, 1.0), c(2.614245294994934404992, 0.0), c(0.8460739477636713102361, 0.0), c(-0.5330655446711936859326, 0.0), c(0.8012985944439177634132, 0.0)),
    (c(0.0, 1.0), c(-1.149526299926850589429, 0.0), c(-0.8688144942525218063489, 0.0), c(0.4951377329357304729168, 0.0), c(0.7890378237374729151718, 0.0)),
    (c(0.0, 1.0), c(0.5562224031904115549458, 0.7416298709205488085423), c(0.7266494383168336886851, 0.6251317489046032542781), c(1.028510391342001470211, -0.4416597421274877398037), c(0.9918768534863414420427, -0.2289859031486135504991)),
    (c(0.0, 1.0), c(0.9270373386506859592169, 0.0), c(0.7653668647301795434569, 0.0), c(0.6435942529055826247354, 0.0), c(0.8408964152537145430311, 0.0)),
    (c(0.0, 1.0), c(0.618024892433790639478, 0.0), c(0.5645794553176609521775, 0.0), c(0.825378724364284350184, 0.0), c(0.9168560515787669927585, 0.0)),
    (c(0.0, 1.0), c(1.236049784867581278956, 0.0), c(0.9002271653691279187334, 0.0), c(0.4354205446823390478225, 0.0), c(0.7712298784187062391356, 0.0)),
    (c(0.0, 1.6), c(0.5965485805997906735848, 0.0), c(0.5590743808330476980321, 0.0), c(0.8291175047580073548634, 0.0), c(0.9843008609809848610914, 0.0)),
    (c(0.0, 1.6), c(2.273333780123526620958, 0.0), c(0.8071733151657653863783, 0.0), c(-0.5903145257270127366199, 0.0), c(0.9669876739083031534213, 0.0)),
    (c(0.0, 1.6), c(-0.9996219458699195070881, 0.0), c(-0.8338603919913345880612, 0.0), c(0.551975404042660059895, 0.0), c(0.964728136966673728809, 0.0)),
    (c(0.0, 1.6), c(0.4836880383241545823039, 0.6449173844322061694053), c(0.5723365094990718126882, 0.6042384252532618090972), c(1.06875574637893652655, -0.3235797443769265933589), c(1.002458525326688446273, -0.03438250777393667721198)),
    (c(0.0, 1.6), c(0.8061467305402576670065, 0.0), c(0.7163243541461710515985, 0.0), c(0.6977674538534101876709, 0.0), c(0.97409427700544968885, 0.0)),
    (c(0.0, 1.6), c(0.5374311536935051113377, 0.0), c(0.5098412825078711830869, 0.0), c(0.8602684852130345740521, 0.0), c(0.9869615880786720835539, 0.0)),
    (c(0.0, 1.6), c(1.074862307387010222675, 0.0), c(0.8716331978914475993561, 0.0), c(0.4901587174921288169131, 0.0), c(0.9613947208846539472728, 0.0)),
];

// (tau, s, argsc(s), argds(s)) for s > 0
pub const INVERSE_REF: &[(C, f64, C, C)] = &[
    (c(0.0, 0.7), 0.3, c(0.2949559008711611331932, 0.0), c(2.346048510347642634244, -0.7490448112237886796161)),
    (c(0.0, 0.7), 0.9, c(0.7932114815922488090924, 0.0), c(1.009219096226324756283, 0.0)),
    (c(0.0, 0.7), 1.7, c(1.229645793778528787874, 0.0), c(0.5683525100996726870763, 0.0)),
    (c(0.0, 0.7), 4.2, c(1.793556452862607206065, 0.0), c(0.236621868765010526642, 0.0)),
    (c(0.0, 1.0), 0.3, c(0.2935240545453445036977, 0.0), c(1.854074677301371918434, -1.252103931847898061386)),
    (c(0.0, 1.0), 0.9, c(0.7658227092846142868525, 0.0), c(1.162174022435761069424, 0.0)),
    (c(0.0, 1.0), 1.7, c(1.132165755126925879149, 0.0), c(0.590018381601420585401, 0.0)),
    (c(0.0, 1.0), 4.2, c(1.526419397215849390085, 0.0), c(0.2381143735586206337123, 0.0)),
    (c(0.0, 1.6), 0.3, c(0.2918626348641203387192, 0.0), c(1.612293461080515334013, -1.674121980808971877868)),
    (c(0.0, 1.6), 0.9, c(0.7388100825473580306611, 0.0), c(1.612293461080515334013, -0.3274413305003050505866)),
    (c(0.0, 1.6), 1.7, c(1.054638089984739570582, 0.0), c(0.6203680670857476973752, 0.0)),
    (c(0.0, 1.6), 4.2, c(1.366197270159641771763, 0.0), c(0.2399414365947342401494, 0.0)),
];

// (tau, k, k1, k2, kp2, g, lhs, rhs) for the doubled-parameter relation
pub const LANDEN_REF: &[(C, C, C, C, C, f64, C, C)] = &[
    (c(0.0, 0.6), c(0.9583194213690424039879, 0.0), c(0.5555741173060719940392, 0.0), c(0.0, -0.6681853952339235857789), c(1.202693528046074866788, 9.200078345805782732649e-44), 0.11, c(0.626313498175906385872, 0.0), c(0.626313498175906385872, 1.964922170543356366894e-44)),
    (c(0.0, 0.6), c(0.9583194213690424039879, 0.0), c(0.5555741173060719940392, 0.0), c(0.0, -0.6681853952339235857789), c(1.202693528046074866788, 9.200078345805782732649e-44), 0.23, c(1.630013122454045679832, 0.0), c(1.630013122454045679832, 2.069712079641730630146e-44)),
    (c(0.0, 0.9), c(0.7833711591005373074746, 0.0), c(0.2333846111810153480298, 0.0), c(0.0, -0.2400126804415650807247), c(1.028399769920600885114, 1.202567179855722327906e-44), 0.11, c(0.4517392965966079899988, 0.0), c(0.4517392965966079899988, 2.34973237855345952967e-45)),
    (c(0.0, 0.9), c(0.7833711591005373074746, 0.0), c(0.2333846111810153480298, 0.0), c(0.0, -0.2400126804415650807247), c(1.028399769920600885114, 1.202567179855722327906e-44), 0.23, c(1.116288450798954517527, 0.0), c(1.116288450798954517527, 3.239248122658008024591e-45)),
    (c(0.0, 1.4), c(0.4226887782879997249044, 0.0), c(0.04916662263447997567814, 0.0), c(0.0, -0.04922615722783367382229), c(1.001210874169582419766, 5.26149799305559833415e-46), 0.11, c(0.3780043026717074595552, 0.0), c(0.3780043026717074595552, 7.293983851325707153421e-47)),
    (c(0.0, 1.4), c(0.4226887782879997249044, 0.0), c(0.04916662263447997567814, 0.0), c(0.0, -0.04922615722783367382229), c(1.001210874169582419766, 5.26149799305559833415e-46), 0.23, c(0.9260145789394432495282, 0.0), c(0.9260145789394432495282, 7.279322076582010373789e-47)),
];

// (tau, s_iso, s1_aniso, s23_aniso, s_square_frustrated, s_square_ferro)
pub const COUPLING_REF: &[(C, f64, f64, f64, f64, f64)] = &[
    (c(0.0, 0.8), 0.7760675650524982846211, 0.7900544251844075133533, 2.433613325648136040837, 1.041052914916255453566, 3.564857861029070689039),
    (c(0.0, 1.2), 1.770819002332458675657, 0.6324918970936464425033, 1.901516104115409162744, 2.221161100459507882404, 1.870878923279998452567),
    (c(0.0, 2.0), 6.642741635826424914793, 0.5816750541455080915535, 1.745049504691839478095, 8.150913486449817937381, 1.189207115002721066717),
];
