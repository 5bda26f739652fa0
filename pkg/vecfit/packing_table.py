"""Empacotamentos de K esferas iguais no cubo unitário, K = 1..64.

PACKINGS[K] = (raio, centros). Os centros distam ao menos 2·raio entre si e
ficam no cubo encolhido [raio, 1 − raio]³.

K = 1, 2, 3, 4, 8, 9, 14, 27 e 64 são construções exatas: centro, diagonal,
triângulo e tetraedro de diagonais de face, vértices, vértices com o centro,
rede cúbica de faces centradas e as grades 3×3×3 e 4×4×4. As demais são as
melhores configurações max-min obtidas por busca offline, gravadas como
constantes. Cada entrada é conferida por palette.validate_entry ao carregar.
"""

PACKINGS = {
    1: (0.5, (
        (0.5, 0.5, 0.5),
    )),
    2: (0.3169872981077, (
        (0.316987298107781, 0.316987298107781, 0.316987298107781),
        (0.683012701892219, 0.683012701892219, 0.683012701892219),
    )),
    3: (0.2928932188134, (
        (0.292893218813453, 0.292893218813453, 0.292893218813453),
        (0.292893218813453, 0.707106781186547, 0.707106781186547),
        (0.707106781186547, 0.292893218813453, 0.707106781186547),
    )),
    4: (0.2928932188134, (
        (0.292893218813453, 0.292893218813453, 0.292893218813453),
        (0.292893218813453, 0.707106781186547, 0.707106781186547),
        (0.707106781186547, 0.292893218813453, 0.707106781186547),
        (0.707106781186547, 0.707106781186547, 0.292893218813453),
    )),
    5: (0.2639320225002, (
        (0.263932022500210, 0.736067977499790, 0.500000000000000),
        (0.500000000000000, 0.263932022500210, 0.263932022500210),
        (0.263932022500210, 0.263932022500210, 0.736067977499790),
        (0.736067977499790, 0.500000000000000, 0.736067977499790),
        (0.736067977499790, 0.736067977499790, 0.263932022500210),
    )),
    6: (0.2573593128804, (
        (0.378679656438542, 0.742640687119527, 0.742640687119527),
        (0.621320343561944, 0.257359312880473, 0.257359312880473),
        (0.257359312880473, 0.257359312880473, 0.621320343561537),
        (0.742640687119527, 0.742640687119527, 0.378679656438193),
        (0.742640687119527, 0.378679656438488, 0.742640687119527),
        (0.257359312880473, 0.621320343561890, 0.257359312880473),
    )),
    7: (0.2499999999999, (
        (0.750000000000000, 0.750000000000000, 0.750000000000000),
        (0.750000000000000, 0.750000000000000, 0.250000000000000),
        (0.750000000000000, 0.250000000000000, 0.250000000000000),
        (0.250000000000000, 0.750000000000000, 0.250000000000000),
        (0.250000000000000, 0.500000000000000, 0.750000000000000),
        (0.750000000000000, 0.250000000000000, 0.750000000000000),
        (0.250000000000000, 0.250000000000000, 0.250000000000000),
    )),
    8: (0.2499999999999, (
        (0.250000000000000, 0.250000000000000, 0.250000000000000),
        (0.250000000000000, 0.250000000000000, 0.750000000000000),
        (0.250000000000000, 0.750000000000000, 0.250000000000000),
        (0.250000000000000, 0.750000000000000, 0.750000000000000),
        (0.750000000000000, 0.250000000000000, 0.250000000000000),
        (0.750000000000000, 0.250000000000000, 0.750000000000000),
        (0.750000000000000, 0.750000000000000, 0.250000000000000),
        (0.750000000000000, 0.750000000000000, 0.750000000000000),
    )),
    9: (0.2320508075688, (
        (0.232050807568877, 0.232050807568877, 0.232050807568877),
        (0.232050807568877, 0.232050807568877, 0.767949192431123),
        (0.232050807568877, 0.767949192431123, 0.232050807568877),
        (0.232050807568877, 0.767949192431123, 0.767949192431123),
        (0.767949192431123, 0.232050807568877, 0.232050807568877),
        (0.767949192431123, 0.232050807568877, 0.767949192431123),
        (0.767949192431123, 0.767949192431123, 0.232050807568877),
        (0.767949192431123, 0.767949192431123, 0.767949192431123),
        (0.500000000000000, 0.500000000000000, 0.500000000000000),
    )),
    10: (0.2142857142854, (
        (0.785714285714509, 0.642857142858212, 0.214285714285491),
        (0.214285714285491, 0.214285714285491, 0.785714285714509),
        (0.785714285714509, 0.214285714285491, 0.785714285714509),
        (0.500000000000696, 0.785714285714509, 0.500000000000000),
        (0.214285714285491, 0.642857142857864, 0.785714285714509),
        (0.214285714285491, 0.214285714285491, 0.214285714285491),
        (0.785714285714509, 0.642857142857864, 0.785714285714509),
        (0.785714285714509, 0.214285714285491, 0.214285714285491),
        (0.500000000000067, 0.357142857143046, 0.500000000000669),
        (0.214285714285491, 0.642857142858212, 0.214285714285491),
    )),
    11: (0.2075366988028, (
        (0.792463301197124, 0.207536698802875, 0.622610096413089),
        (0.792463301197124, 0.207536698802875, 0.207536698802875),
        (0.792463301197124, 0.622610096413089, 0.207536698802875),
        (0.792463301197124, 0.792463301197124, 0.792463301197124),
        (0.207536698802875, 0.792463301197124, 0.207536698802875),
        (0.207536698802875, 0.475338691167548, 0.475338691165835),
        (0.524661308834296, 0.792463301197124, 0.475338691167393),
        (0.377389903586911, 0.207536698802875, 0.207536698802875),
        (0.524661308834296, 0.475338691167393, 0.792463301197124),
        (0.207536698802875, 0.207536698802875, 0.792463301197124),
        (0.224683420159462, 0.789935759691796, 0.768079897145568),
    )),
    12: (0.2071067811865, (
        (0.792893218813452, 0.500000000000000, 0.207106781186548),
        (0.792893218813452, 0.500000000000000, 0.792893218813452),
        (0.207106781186548, 0.500000000000000, 0.792893218813452),
        (0.207106781186548, 0.207106781186548, 0.500000000000000),
        (0.500000000000000, 0.792893218813452, 0.792893218813452),
        (0.792893218813452, 0.207106781186548, 0.500000000000000),
        (0.500000000000000, 0.207106781186548, 0.207106781186548),
        (0.207106781186548, 0.792893218813452, 0.500000000000000),
        (0.500000000000000, 0.792893218813452, 0.207106781186548),
        (0.500000000000000, 0.207106781186548, 0.792893218813452),
        (0.792893218813452, 0.792893218813452, 0.500000000000000),
        (0.207106781186548, 0.500000000000000, 0.207106781186548),
    )),
    13: (0.2071067811865, (
        (0.207106781186548, 0.207106781186548, 0.207106781186548),
        (0.207106781186548, 0.207106781186548, 0.792893218813452),
        (0.207106781186548, 0.792893218813452, 0.207106781186548),
        (0.207106781186548, 0.792893218813452, 0.792893218813452),
        (0.792893218813452, 0.207106781186548, 0.207106781186548),
        (0.792893218813452, 0.207106781186548, 0.792893218813452),
        (0.792893218813452, 0.792893218813452, 0.207106781186548),
        (0.792893218813452, 0.792893218813452, 0.792893218813452),
        (0.500000000000000, 0.500000000000000, 0.207106781186548),
        (0.500000000000000, 0.500000000000000, 0.792893218813452),
        (0.500000000000000, 0.207106781186548, 0.500000000000000),
        (0.500000000000000, 0.792893218813452, 0.500000000000000),
        (0.207106781186548, 0.500000000000000, 0.500000000000000),
    )),
    14: (0.2071067811865, (
        (0.207106781186548, 0.207106781186548, 0.207106781186548),
        (0.207106781186548, 0.207106781186548, 0.792893218813452),
        (0.207106781186548, 0.792893218813452, 0.207106781186548),
        (0.207106781186548, 0.792893218813452, 0.792893218813452),
        (0.792893218813452, 0.207106781186548, 0.207106781186548),
        (0.792893218813452, 0.207106781186548, 0.792893218813452),
        (0.792893218813452, 0.792893218813452, 0.207106781186548),
        (0.792893218813452, 0.792893218813452, 0.792893218813452),
        (0.500000000000000, 0.500000000000000, 0.207106781186548),
        (0.500000000000000, 0.500000000000000, 0.792893218813452),
        (0.500000000000000, 0.207106781186548, 0.500000000000000),
        (0.500000000000000, 0.792893218813452, 0.500000000000000),
        (0.207106781186548, 0.500000000000000, 0.500000000000000),
        (0.792893218813452, 0.500000000000000, 0.500000000000000),
    )),
    15: (0.1907282535111, (
        (0.809271746488878, 0.499278688209021, 0.585576463639782),
        (0.200844524596244, 0.490897513708823, 0.573018021598876),
        (0.500290580986821, 0.498742654241184, 0.809271746488878),
        (0.451880207994965, 0.190728253511122, 0.190728253511122),
        (0.190728253511122, 0.468772716536158, 0.190728253511122),
        (0.809271746488878, 0.808260310830573, 0.809271746488878),
        (0.809271746488878, 0.809271746488878, 0.362677707395434),
        (0.554602269279302, 0.583249476820181, 0.190728253511122),
        (0.491607646049814, 0.198103926823272, 0.571638765444664),
        (0.190728253511122, 0.809271746488878, 0.362686291168210),
        (0.500003085591423, 0.809271746488878, 0.585975967409041),
        (0.190728253511122, 0.190728253511122, 0.809271746488878),
        (0.809271746488878, 0.306901187486772, 0.256182904776260),
        (0.792487540912732, 0.190728253511122, 0.809271746488878),
        (0.190728253511122, 0.809271746488878, 0.809271746488878),
    )),
    16: (0.1879086908705, (
        (0.455637668567712, 0.457555992309162, 0.547309232357560),
        (0.812091309129421, 0.275418564119421, 0.187908690870579),
        (0.812091309129421, 0.812091309129421, 0.187908690870579),
        (0.543805642051548, 0.548915502208524, 0.187908690870579),
        (0.187908690870579, 0.812091309129421, 0.564639316296345),
        (0.812091309129421, 0.543756034955808, 0.451033918009728),
        (0.812091309129421, 0.812091309129421, 0.724583513256232),
        (0.459888090491463, 0.187908690870579, 0.285548973999599),
        (0.732199520345993, 0.187908690870579, 0.544557062113405),
        (0.187908690870579, 0.187908690870579, 0.544934149356462),
        (0.187908690870579, 0.812091309129421, 0.187908690870579),
        (0.468237229631635, 0.187908690870579, 0.812091309129421),
        (0.812091309129421, 0.439466702682361, 0.812091309129421),
        (0.187908690870579, 0.457244963555392, 0.812091309129421),
        (0.187908690870579, 0.428184128310575, 0.187908690870579),
        (0.547892425653106, 0.812091309129421, 0.456163266315269),
    )),
    17: (0.1879086908705, (
        (0.455637668567712, 0.457555992309162, 0.547309232357560),
        (0.812091309129421, 0.275418564119421, 0.187908690870579),
        (0.812091309129421, 0.812091309129421, 0.187908690870579),
        (0.543805642051548, 0.548915502208524, 0.187908690870579),
        (0.187908690870579, 0.812091309129421, 0.564639316296345),
        (0.812091309129421, 0.543756034955808, 0.451033918009728),
        (0.812091309129421, 0.812091309129421, 0.724583513256232),
        (0.459888090491463, 0.187908690870579, 0.285548973999599),
        (0.732199520345993, 0.187908690870579, 0.544557062113405),
        (0.187908690870579, 0.187908690870579, 0.544934149356462),
        (0.187908690870579, 0.812091309129421, 0.187908690870579),
        (0.468237229631635, 0.187908690870579, 0.812091309129421),
        (0.812091309129421, 0.439466702682361, 0.812091309129421),
        (0.187908690870579, 0.457244963555392, 0.812091309129421),
        (0.187908690870579, 0.428184128310575, 0.187908690870579),
        (0.547892425653106, 0.812091309129421, 0.456163266315269),
        (0.457037301272841, 0.724271008815417, 0.812091309129421),
    )),
    18: (0.1876806011473, (
        (0.500000000000120, 0.812319398852684, 0.187680601147316),
        (0.500000000000014, 0.499999999999740, 0.812319398852684),
        (0.499999999999864, 0.500000000000021, 0.395893533715574),
        (0.187680601147316, 0.187680601147316, 0.395893533715614),
        (0.499999999999881, 0.187680601147316, 0.187680601147316),
        (0.812319398852684, 0.812319398852684, 0.395893533715643),
        (0.812319398852684, 0.500000000000445, 0.604106466284486),
        (0.187680601147316, 0.500000000000007, 0.604106466283994),
        (0.812319398852684, 0.812319398852684, 0.812319398852684),
        (0.812319398852684, 0.187680601147316, 0.395893533715809),
        (0.187680601147316, 0.812319398852684, 0.812319398852684),
        (0.187680601147316, 0.499999999999881, 0.187680601147316),
        (0.499999999999900, 0.187680601147316, 0.604106466284002),
        (0.187680601147316, 0.812319398852684, 0.395893533715825),
        (0.500000000000472, 0.812319398852684, 0.604106466284288),
        (0.187680601147316, 0.187680601147316, 0.812319398852684),
        (0.812319398852684, 0.187680601147316, 0.812319398852684),
        (0.812319398852684, 0.500000000000169, 0.187680601147316),
    )),
    19: (0.1767920156392, (
        (0.823207984360721, 0.469998837271863, 0.444463064915262),
        (0.489041944136403, 0.367895418333849, 0.526505809756827),
        (0.236898912975162, 0.823207984360721, 0.823207984360721),
        (0.176792015639279, 0.176792015639279, 0.176792015639279),
        (0.361323713959305, 0.823207984360721, 0.176792015639279),
        (0.766727087119718, 0.176792015639279, 0.633925228753422),
        (0.816535651680728, 0.823207984360721, 0.801137425664608),
        (0.176792015639279, 0.176792015639279, 0.532039664926556),
        (0.823207984360721, 0.176792015639279, 0.217928332192544),
        (0.659618578326550, 0.633352692911015, 0.176792015639279),
        (0.501308906819552, 0.317185941846347, 0.176792015639279),
        (0.509270356088312, 0.823207984360721, 0.588901803135043),
        (0.176792015639279, 0.526047121221419, 0.232272480835811),
        (0.176792015639279, 0.378234203392542, 0.823207984360721),
        (0.823207984360721, 0.823207984360721, 0.426221648440200),
        (0.467386084856337, 0.176792015639279, 0.823207984360721),
        (0.480096756298090, 0.560013794281059, 0.823207984360721),
        (0.823207984360721, 0.470114688148275, 0.823207984360721),
        (0.176792015639279, 0.782541191503271, 0.475649729122284),
    )),
    20: (0.1756820524815, (
        (0.175682052481511, 0.527035155161054, 0.175682052481511),
        (0.518612649356108, 0.518612649356009, 0.748263914575380),
        (0.175682052481511, 0.175682052481511, 0.824317947518489),
        (0.177956957273770, 0.175682052481511, 0.177614171712515),
        (0.187257438864382, 0.824168246353952, 0.486107494915302),
        (0.824317947518489, 0.175682052481511, 0.175682052481511),
        (0.463663374354563, 0.824317947518489, 0.175682052481511),
        (0.824317947518489, 0.362995204945033, 0.824317947518489),
        (0.824317947518489, 0.824317947518489, 0.210234549981973),
        (0.824317947518489, 0.815186296726411, 0.819649845268947),
        (0.362995204941850, 0.824317947518489, 0.824317947518489),
        (0.179183539007274, 0.316544987878703, 0.499592041469416),
        (0.435889095099967, 0.560707213479128, 0.409381050592742),
        (0.691363186709638, 0.500920082282475, 0.175682052481511),
        (0.824317947518489, 0.175682052481511, 0.527046157446552),
        (0.496826002804701, 0.178536877274421, 0.379294717410017),
        (0.527046157446694, 0.175682052481511, 0.824317947518489),
        (0.824317947518489, 0.526049530300861, 0.499988905270473),
        (0.639719015870586, 0.824317947518489, 0.520823781374192),
        (0.175682052481511, 0.527046157445506, 0.824317947518489),
    )),
    21: (0.1739969245436, (
        (0.527783732290084, 0.476596025751768, 0.173996924543702),
        (0.817888011684669, 0.173996924543702, 0.196993233483622),
        (0.655930344010716, 0.826003075456297, 0.826003075456297),
        (0.668095487930435, 0.173996924543702, 0.515898383599207),
        (0.173996924543702, 0.350337607948844, 0.814471927783702),
        (0.173996924543702, 0.826003075456297, 0.173996924543702),
        (0.352302815948902, 0.173996924543702, 0.183102590233645),
        (0.173996924543702, 0.662941765555602, 0.481422907864496),
        (0.826003075456297, 0.173996924543702, 0.826003075456297),
        (0.173996924543702, 0.173996924543702, 0.483100270661256),
        (0.474125233354315, 0.529053254405540, 0.826003075456297),
        (0.826003075456297, 0.826003075456297, 0.522399727797387),
        (0.421064713307197, 0.418598494343250, 0.500227107082240),
        (0.521947954732974, 0.826003075456297, 0.180122943182543),
        (0.176932510643212, 0.476304524541779, 0.186480323473095),
        (0.175474795807376, 0.826003075456297, 0.823894544196195),
        (0.475515347870085, 0.173996924543702, 0.826003075456297),
        (0.826003075456297, 0.522297166862072, 0.822645548160309),
        (0.478038501915081, 0.826003075456297, 0.526914093567371),
        (0.826003075456297, 0.481323758151879, 0.474484253778551),
        (0.826003075456297, 0.656843250396468, 0.173996924543702),
    )),
    22: (0.1732035123904, (
        (0.173203512390486, 0.418145192496031, 0.826796487609514),
        (0.826796487609514, 0.826796487609514, 0.581837889040813),
        (0.826796487609514, 0.173203512390486, 0.291520154966784),
        (0.173203512390486, 0.557795315346200, 0.509785843521343),
        (0.492251638628970, 0.761947461108973, 0.173203512390486),
        (0.499998245194110, 0.500001740095659, 0.746158189980636),
        (0.238053977264845, 0.507748675967072, 0.173203512390486),
        (0.581854826822984, 0.826796487609514, 0.826796487609514),
        (0.826796487609514, 0.174472495316901, 0.826796487609514),
        (0.499996948472095, 0.500004561916945, 0.399751110424356),
        (0.197155066450874, 0.780414818600033, 0.784099675353901),
        (0.557800081591926, 0.173203512390486, 0.509783403089779),
        (0.826796487609514, 0.826796487609514, 0.235430744897709),
        (0.826796487609514, 0.442199721376443, 0.509783545763986),
        (0.761939713305344, 0.492253122034326, 0.173203512390486),
        (0.173203512390486, 0.173203512390486, 0.235427431135105),
        (0.507747203779299, 0.238061769712975, 0.173203512390486),
        (0.418155472250595, 0.173203512390486, 0.826796487609514),
        (0.442204537489462, 0.826796487609514, 0.509785998836458),
        (0.173203512390486, 0.173203512390486, 0.581834585885584),
        (0.173203512390486, 0.826796487609514, 0.291528464369359),
        (0.826796487609514, 0.581844551596616, 0.826796487609514),
    )),
    23: (0.1710691124158, (
        (0.768576659045081, 0.171069112415845, 0.497374920606610),
        (0.586742775045891, 0.503245720573446, 0.171069112415845),
        (0.825356710689307, 0.501375964946774, 0.420476183036890),
        (0.828930887584155, 0.259398734271173, 0.171069112415845),
        (0.171069112415845, 0.475351081665337, 0.507369227752939),
        (0.642568460877232, 0.523561219456055, 0.818505255759554),
        (0.747435563855994, 0.827648542884044, 0.495355425206931),
        (0.256270594907656, 0.828930887584155, 0.502428844839957),
        (0.171069112415845, 0.171069112415845, 0.701429078896080),
        (0.501530075986247, 0.587503532072126, 0.499001301697520),
        (0.171069112415845, 0.175737764393485, 0.282179041116709),
        (0.435110234657881, 0.250704840511324, 0.498858429816920),
        (0.493107530351021, 0.171069112415845, 0.828852876363844),
        (0.306857546249383, 0.458117545877809, 0.828930887584155),
        (0.497808195785510, 0.828930887584155, 0.744766502355699),
        (0.828930887584155, 0.236761046813139, 0.828930887584155),
        (0.171069112415845, 0.828930887584155, 0.171069112415845),
        (0.828930887584155, 0.747094160469444, 0.171069112415845),
        (0.243193981521807, 0.492884434144817, 0.171069112415845),
        (0.505055996597753, 0.828930887584155, 0.251755699677731),
        (0.496797303702822, 0.171069112415845, 0.171069112415845),
        (0.171069112415845, 0.772209033187898, 0.828930887584155),
        (0.828930887584155, 0.810360649683920, 0.828930887584155),
    )),
    24: (0.1693158714363, (
        (0.492499827384509, 0.830684128563615, 0.830684128563615),
        (0.515864809958484, 0.169315871436385, 0.830684128563615),
        (0.469579088082917, 0.623559050422919, 0.523963166559020),
        (0.248746158311210, 0.169315871436385, 0.499122949826414),
        (0.830684128563615, 0.809835220791582, 0.830684128563615),
        (0.169315871436385, 0.484187075763655, 0.595301631683560),
        (0.526930604345164, 0.169315871436385, 0.209594879254864),
        (0.830684128563615, 0.449772967962528, 0.169315871436385),
        (0.412642999216736, 0.491832095946034, 0.830684128563615),
        (0.169315871436385, 0.174396852059783, 0.830684128563615),
        (0.175747703433437, 0.830684128563615, 0.169315871436385),
        (0.190056334558096, 0.830684128563615, 0.507877899825996),
        (0.830684128563615, 0.169315871436385, 0.359278725442903),
        (0.737909210426476, 0.830684128563615, 0.505079348663463),
        (0.830684128563615, 0.169315871436385, 0.697910468321801),
        (0.496346128804325, 0.504149634169626, 0.169315871436385),
        (0.505787710996523, 0.830684128563615, 0.258520903691295),
        (0.750758760534690, 0.470468103070713, 0.830684128563615),
        (0.830684128563615, 0.505005094928158, 0.503424738651754),
        (0.169315871436385, 0.169774564450434, 0.169315871436385),
        (0.169315871436385, 0.728785795846888, 0.830684128563615),
        (0.562298546812412, 0.297882860643600, 0.520868224109517),
        (0.830684128563615, 0.793342807521223, 0.170627220458628),
        (0.169315871436385, 0.502860142586889, 0.257185122384625),
    )),
    25: (0.1666666666666, (
        (0.166666666666667, 0.166666666666667, 0.166666666666667),
        (0.166666666666667, 0.166666666666667, 0.500000000000000),
        (0.166666666666667, 0.166666666666667, 0.833333333333333),
        (0.166666666666667, 0.500000000000000, 0.166666666666667),
        (0.166666666666667, 0.500000000000000, 0.500000000000000),
        (0.166666666666667, 0.500000000000000, 0.833333333333333),
        (0.166666666666667, 0.833333333333333, 0.166666666666667),
        (0.166666666666667, 0.833333333333333, 0.500000000000000),
        (0.166666666666667, 0.833333333333333, 0.833333333333333),
        (0.500000000000000, 0.166666666666667, 0.166666666666667),
        (0.500000000000000, 0.166666666666667, 0.500000000000000),
        (0.500000000000000, 0.166666666666667, 0.833333333333333),
        (0.500000000000000, 0.500000000000000, 0.166666666666667),
        (0.500000000000000, 0.500000000000000, 0.500000000000000),
        (0.500000000000000, 0.500000000000000, 0.833333333333333),
        (0.500000000000000, 0.833333333333333, 0.166666666666667),
        (0.500000000000000, 0.833333333333333, 0.500000000000000),
        (0.500000000000000, 0.833333333333333, 0.833333333333333),
        (0.833333333333333, 0.166666666666667, 0.166666666666667),
        (0.833333333333333, 0.166666666666667, 0.500000000000000),
        (0.833333333333333, 0.166666666666667, 0.833333333333333),
        (0.833333333333333, 0.500000000000000, 0.166666666666667),
        (0.833333333333333, 0.500000000000000, 0.500000000000000),
        (0.833333333333333, 0.500000000000000, 0.833333333333333),
        (0.833333333333333, 0.833333333333333, 0.166666666666667),
    )),
    26: (0.1666666666666, (
        (0.166666666666667, 0.166666666666667, 0.166666666666667),
        (0.166666666666667, 0.166666666666667, 0.500000000000000),
        (0.166666666666667, 0.166666666666667, 0.833333333333333),
        (0.166666666666667, 0.500000000000000, 0.166666666666667),
        (0.166666666666667, 0.500000000000000, 0.500000000000000),
        (0.166666666666667, 0.500000000000000, 0.833333333333333),
        (0.166666666666667, 0.833333333333333, 0.166666666666667),
        (0.166666666666667, 0.833333333333333, 0.500000000000000),
        (0.166666666666667, 0.833333333333333, 0.833333333333333),
        (0.500000000000000, 0.166666666666667, 0.166666666666667),
        (0.500000000000000, 0.166666666666667, 0.500000000000000),
        (0.500000000000000, 0.166666666666667, 0.833333333333333),
        (0.500000000000000, 0.500000000000000, 0.166666666666667),
        (0.500000000000000, 0.500000000000000, 0.500000000000000),
        (0.500000000000000, 0.500000000000000, 0.833333333333333),
        (0.500000000000000, 0.833333333333333, 0.166666666666667),
        (0.500000000000000, 0.833333333333333, 0.500000000000000),
        (0.500000000000000, 0.833333333333333, 0.833333333333333),
        (0.833333333333333, 0.166666666666667, 0.166666666666667),
        (0.833333333333333, 0.166666666666667, 0.500000000000000),
        (0.833333333333333, 0.166666666666667, 0.833333333333333),
        (0.833333333333333, 0.500000000000000, 0.166666666666667),
        (0.833333333333333, 0.500000000000000, 0.500000000000000),
        (0.833333333333333, 0.500000000000000, 0.833333333333333),
        (0.833333333333333, 0.833333333333333, 0.166666666666667),
        (0.833333333333333, 0.833333333333333, 0.500000000000000),
    )),
    27: (0.1666666666666, (
        (0.166666666666667, 0.166666666666667, 0.166666666666667),
        (0.166666666666667, 0.166666666666667, 0.500000000000000),
        (0.166666666666667, 0.166666666666667, 0.833333333333333),
        (0.166666666666667, 0.500000000000000, 0.166666666666667),
        (0.166666666666667, 0.500000000000000, 0.500000000000000),
        (0.166666666666667, 0.500000000000000, 0.833333333333333),
        (0.166666666666667, 0.833333333333333, 0.166666666666667),
        (0.166666666666667, 0.833333333333333, 0.500000000000000),
        (0.166666666666667, 0.833333333333333, 0.833333333333333),
        (0.500000000000000, 0.166666666666667, 0.166666666666667),
        (0.500000000000000, 0.166666666666667, 0.500000000000000),
        (0.500000000000000, 0.166666666666667, 0.833333333333333),
        (0.500000000000000, 0.500000000000000, 0.166666666666667),
        (0.500000000000000, 0.500000000000000, 0.500000000000000),
        (0.500000000000000, 0.500000000000000, 0.833333333333333),
        (0.500000000000000, 0.833333333333333, 0.166666666666667),
        (0.500000000000000, 0.833333333333333, 0.500000000000000),
        (0.500000000000000, 0.833333333333333, 0.833333333333333),
        (0.833333333333333, 0.166666666666667, 0.166666666666667),
        (0.833333333333333, 0.166666666666667, 0.500000000000000),
        (0.833333333333333, 0.166666666666667, 0.833333333333333),
        (0.833333333333333, 0.500000000000000, 0.166666666666667),
        (0.833333333333333, 0.500000000000000, 0.500000000000000),
        (0.833333333333333, 0.500000000000000, 0.833333333333333),
        (0.833333333333333, 0.833333333333333, 0.166666666666667),
        (0.833333333333333, 0.833333333333333, 0.500000000000000),
        (0.833333333333333, 0.833333333333333, 0.833333333333333),
    )),
    28: (0.1601886205085, (
        (0.160188620508510, 0.839811379491490, 0.839811379491490),
        (0.839811379491490, 0.160188620508510, 0.839811379491490),
        (0.839811379491490, 0.839811379491490, 0.160188620508510),
        (0.160188620508510, 0.160188620508510, 0.160188620508510),
        (0.613270459830538, 0.839811379491490, 0.839811379491490),
        (0.839811379491490, 0.613270459830487, 0.839811379491490),
        (0.839811379491490, 0.839811379491490, 0.613270459830483),
        (0.160188620508510, 0.386729540169460, 0.839811379491490),
        (0.386729540169515, 0.160188620508510, 0.839811379491490),
        (0.160188620508510, 0.839811379491490, 0.386729540169602),
        (0.386729540169539, 0.839811379491490, 0.160188620508510),
        (0.160188620508510, 0.160188620508510, 0.613270459830358),
        (0.839811379491490, 0.160188620508510, 0.386729540169550),
        (0.839811379491490, 0.386729540169538, 0.160188620508510),
        (0.160188620508510, 0.613270459830575, 0.160188620508510),
        (0.613270459830573, 0.160188620508510, 0.160188620508510),
        (0.386729540169538, 0.613270459830498, 0.839811379491490),
        (0.386729540169549, 0.839811379491490, 0.613270459830521),
        (0.613270459830497, 0.386729540169497, 0.839811379491490),
        (0.613270459830504, 0.839811379491490, 0.386729540169509),
        (0.839811379491490, 0.386729540169501, 0.613270459830519),
        (0.160188620508510, 0.613270459830474, 0.613270459830546),
        (0.839811379491490, 0.613270459830517, 0.386729540169495),
        (0.613270459830496, 0.160188620508510, 0.613270459830515),
        (0.613270459830510, 0.613270459830514, 0.160188620508510),
        (0.160188620508510, 0.386729540169566, 0.386729540169458),
        (0.386729540169543, 0.160188620508510, 0.386729540169436),
        (0.386729540169521, 0.386729540169544, 0.160188620508510),
    )),
    29: (0.1601886205085, (
        (0.160188620508510, 0.839811379491490, 0.839811379491490),
        (0.839811379491490, 0.160188620508510, 0.839811379491490),
        (0.839811379491490, 0.839811379491490, 0.160188620508510),
        (0.160188620508510, 0.160188620508510, 0.160188620508510),
        (0.613270459830538, 0.839811379491490, 0.839811379491490),
        (0.839811379491490, 0.613270459830487, 0.839811379491490),
        (0.839811379491490, 0.839811379491490, 0.613270459830483),
        (0.160188620508510, 0.386729540169460, 0.839811379491490),
        (0.386729540169515, 0.160188620508510, 0.839811379491490),
        (0.160188620508510, 0.839811379491490, 0.386729540169602),
        (0.386729540169539, 0.839811379491490, 0.160188620508510),
        (0.160188620508510, 0.160188620508510, 0.613270459830358),
        (0.839811379491490, 0.160188620508510, 0.386729540169550),
        (0.839811379491490, 0.386729540169538, 0.160188620508510),
        (0.160188620508510, 0.613270459830575, 0.160188620508510),
        (0.613270459830573, 0.160188620508510, 0.160188620508510),
        (0.386729540169538, 0.613270459830498, 0.839811379491490),
        (0.386729540169549, 0.839811379491490, 0.613270459830521),
        (0.613270459830497, 0.386729540169497, 0.839811379491490),
        (0.613270459830504, 0.839811379491490, 0.386729540169509),
        (0.839811379491490, 0.386729540169501, 0.613270459830519),
        (0.160188620508510, 0.613270459830474, 0.613270459830546),
        (0.839811379491490, 0.613270459830517, 0.386729540169495),
        (0.613270459830496, 0.160188620508510, 0.613270459830515),
        (0.613270459830510, 0.613270459830514, 0.160188620508510),
        (0.160188620508510, 0.386729540169566, 0.386729540169458),
        (0.386729540169543, 0.160188620508510, 0.386729540169436),
        (0.386729540169521, 0.386729540169544, 0.160188620508510),
        (0.613270459830479, 0.613270459830460, 0.613270459830442),
    )),
    30: (0.1601886205085, (
        (0.160188620508510, 0.839811379491490, 0.839811379491490),
        (0.839811379491490, 0.160188620508510, 0.839811379491490),
        (0.839811379491490, 0.839811379491490, 0.160188620508510),
        (0.160188620508510, 0.160188620508510, 0.160188620508510),
        (0.613270459830538, 0.839811379491490, 0.839811379491490),
        (0.839811379491490, 0.613270459830487, 0.839811379491490),
        (0.839811379491490, 0.839811379491490, 0.613270459830483),
        (0.160188620508510, 0.386729540169460, 0.839811379491490),
        (0.386729540169515, 0.160188620508510, 0.839811379491490),
        (0.160188620508510, 0.839811379491490, 0.386729540169602),
        (0.386729540169539, 0.839811379491490, 0.160188620508510),
        (0.160188620508510, 0.160188620508510, 0.613270459830358),
        (0.839811379491490, 0.160188620508510, 0.386729540169550),
        (0.839811379491490, 0.386729540169538, 0.160188620508510),
        (0.160188620508510, 0.613270459830575, 0.160188620508510),
        (0.613270459830573, 0.160188620508510, 0.160188620508510),
        (0.386729540169538, 0.613270459830498, 0.839811379491490),
        (0.386729540169549, 0.839811379491490, 0.613270459830521),
        (0.613270459830497, 0.386729540169497, 0.839811379491490),
        (0.613270459830504, 0.839811379491490, 0.386729540169509),
        (0.839811379491490, 0.386729540169501, 0.613270459830519),
        (0.160188620508510, 0.613270459830474, 0.613270459830546),
        (0.839811379491490, 0.613270459830517, 0.386729540169495),
        (0.613270459830496, 0.160188620508510, 0.613270459830515),
        (0.613270459830510, 0.613270459830514, 0.160188620508510),
        (0.160188620508510, 0.386729540169566, 0.386729540169458),
        (0.386729540169543, 0.160188620508510, 0.386729540169436),
        (0.386729540169521, 0.386729540169544, 0.160188620508510),
        (0.613270459830479, 0.613270459830460, 0.613270459830442),
        (0.386729540169501, 0.386729540169478, 0.613270459830426),
    )),
    31: (0.1601886205084, (
        (0.613270459830493, 0.839811379491503, 0.839811379491503),
        (0.386729540169468, 0.839811379491503, 0.160188620508497),
        (0.386729540169440, 0.160188620508497, 0.386729540169462),
        (0.386729540169498, 0.839811379491503, 0.613270459830522),
        (0.839811379491503, 0.613270459830517, 0.839811379491503),
        (0.160188620508497, 0.839811379491503, 0.839811379491503),
        (0.839811379491503, 0.160188620508497, 0.839811379491503),
        (0.160188620508497, 0.839811379491503, 0.386729540169480),
        (0.386729540169466, 0.386729540169462, 0.160188620508497),
        (0.160188620508497, 0.160188620508497, 0.160188620508497),
        (0.613270459830458, 0.839811379491503, 0.386729540169483),
        (0.160188620508497, 0.386729540169474, 0.839811379491503),
        (0.613270459830507, 0.160188620508497, 0.613270459830462),
        (0.839811379491503, 0.386729540169468, 0.613270459830530),
        (0.160188620508497, 0.613270459830539, 0.160188620508497),
        (0.160188620508497, 0.160188620508497, 0.613270459830498),
        (0.160188620508497, 0.613270459830562, 0.613270459830510),
        (0.160188620508497, 0.386729540169482, 0.386729540169444),
        (0.386729540169450, 0.386729540169457, 0.613270459830449),
        (0.386729540169466, 0.613270459830558, 0.386729540169483),
        (0.613270459830460, 0.613270459830516, 0.160188620508497),
        (0.839811379491503, 0.839811379491503, 0.613270459830550),
        (0.386729540169470, 0.613270459830537, 0.839811379491503),
        (0.613270459830462, 0.386729540169475, 0.386729540169487),
        (0.839811379491503, 0.160188620508497, 0.386729540169543),
        (0.839811379491503, 0.839811379491503, 0.160188620508497),
        (0.613270459830554, 0.386729540169481, 0.839811379491503),
        (0.839811379491503, 0.613270459830522, 0.386729540169504),
        (0.839811379491503, 0.386729540169527, 0.160188620508497),
        (0.613270459830500, 0.160188620508497, 0.160188620508497),
        (0.386729540169502, 0.160188620508497, 0.839811379491503),
    )),
    32: (0.1601886205084, (
        (0.613270459830493, 0.839811379491503, 0.839811379491503),
        (0.386729540169468, 0.839811379491503, 0.160188620508497),
        (0.386729540169440, 0.160188620508497, 0.386729540169462),
        (0.386729540169498, 0.839811379491503, 0.613270459830522),
        (0.839811379491503, 0.613270459830517, 0.839811379491503),
        (0.160188620508497, 0.839811379491503, 0.839811379491503),
        (0.839811379491503, 0.160188620508497, 0.839811379491503),
        (0.160188620508497, 0.839811379491503, 0.386729540169480),
        (0.386729540169466, 0.386729540169462, 0.160188620508497),
        (0.160188620508497, 0.160188620508497, 0.160188620508497),
        (0.613270459830458, 0.839811379491503, 0.386729540169483),
        (0.160188620508497, 0.386729540169474, 0.839811379491503),
        (0.613270459830507, 0.160188620508497, 0.613270459830462),
        (0.839811379491503, 0.386729540169468, 0.613270459830530),
        (0.160188620508497, 0.613270459830539, 0.160188620508497),
        (0.160188620508497, 0.160188620508497, 0.613270459830498),
        (0.160188620508497, 0.613270459830562, 0.613270459830510),
        (0.160188620508497, 0.386729540169482, 0.386729540169444),
        (0.386729540169450, 0.386729540169457, 0.613270459830449),
        (0.386729540169466, 0.613270459830558, 0.386729540169483),
        (0.613270459830460, 0.613270459830516, 0.160188620508497),
        (0.839811379491503, 0.839811379491503, 0.613270459830550),
        (0.386729540169470, 0.613270459830537, 0.839811379491503),
        (0.613270459830462, 0.386729540169475, 0.386729540169487),
        (0.839811379491503, 0.160188620508497, 0.386729540169543),
        (0.839811379491503, 0.839811379491503, 0.160188620508497),
        (0.613270459830554, 0.386729540169481, 0.839811379491503),
        (0.839811379491503, 0.613270459830522, 0.386729540169504),
        (0.839811379491503, 0.386729540169527, 0.160188620508497),
        (0.613270459830500, 0.160188620508497, 0.160188620508497),
        (0.386729540169502, 0.160188620508497, 0.839811379491503),
        (0.613270459830484, 0.613270459830543, 0.613270459830537),
    )),
    33: (0.1520578381744, (
        (0.847942161825506, 0.847942161825506, 0.847942161825506),
        (0.152057838174494, 0.847942161825506, 0.847942161825506),
        (0.838173582783313, 0.152057838174494, 0.832959570719126),
        (0.152057838174494, 0.152057838174494, 0.847942161825506),
        (0.812960579619233, 0.847942161825506, 0.152057838174494),
        (0.152057838174494, 0.847942161825506, 0.152057838174494),
        (0.847942161825506, 0.152057838174494, 0.152057838174494),
        (0.152057838174494, 0.168076569779443, 0.152057838174494),
        (0.456483764863943, 0.847942161825506, 0.847942161825506),
        (0.847942161825506, 0.486115593425581, 0.838507321833005),
        (0.832054684769565, 0.845726749859562, 0.457098005033598),
        (0.152057838174494, 0.458967958468696, 0.847942161825506),
        (0.152057838174494, 0.847942161825506, 0.493482742571437),
        (0.508304867854513, 0.152057838174494, 0.847942161825506),
        (0.502151329050785, 0.847942161825506, 0.152057838174494),
        (0.847942161825506, 0.152057838174494, 0.494055999915138),
        (0.847942161825506, 0.545844969241351, 0.152057838174494),
        (0.152057838174494, 0.152057838174494, 0.457759458251252),
        (0.154492159990532, 0.473276987244666, 0.152057838174494),
        (0.528644282098751, 0.152057838174494, 0.152057838174494),
        (0.479441981913763, 0.482786543347313, 0.847942161825506),
        (0.472728225567075, 0.847942161825506, 0.514668075406240),
        (0.847942161825506, 0.523812434252910, 0.513815915483759),
        (0.152057838174494, 0.456200475376130, 0.455684095790508),
        (0.500270752737231, 0.152057838174494, 0.454847184375524),
        (0.457603702476468, 0.447759821766220, 0.152057838174494),
        (0.652644759817679, 0.676512873688512, 0.689963393819290),
        (0.303513070924976, 0.636244325522909, 0.652641755952092),
        (0.658061740627582, 0.330738162333121, 0.652353648115626),
        (0.327816736366066, 0.305477314758915, 0.652858542543288),
        (0.629988956107317, 0.646548819506467, 0.340765618669340),
        (0.327096678956848, 0.664851467467985, 0.320359907454667),
        (0.689925351146907, 0.348951423983438, 0.321616165849710),
    )),
    34: (0.1516685226451, (
        (0.848331477354878, 0.848331477354878, 0.848331477354878),
        (0.151668522645122, 0.848331477354878, 0.848331477354878),
        (0.848331477354878, 0.151668522645122, 0.848331477354878),
        (0.151668522645122, 0.151668522645122, 0.848331477354878),
        (0.848331477354878, 0.848331477354878, 0.151668522645122),
        (0.151668522645122, 0.848331477354878, 0.151668522645122),
        (0.848331477354878, 0.151668522645122, 0.151668522645122),
        (0.151668522645122, 0.151668522645122, 0.151668522645122),
        (0.544994432064251, 0.848331477354878, 0.848331477354878),
        (0.848331477354878, 0.500000000000097, 0.848331477354878),
        (0.848331477354878, 0.848331477354878, 0.455005567935795),
        (0.151668522645122, 0.500000000000072, 0.848331477354878),
        (0.151668522645122, 0.848331477354878, 0.544994432064266),
        (0.544994432064278, 0.151668522645122, 0.848331477354878),
        (0.455005567935809, 0.848331477354878, 0.151668522645122),
        (0.848331477354878, 0.151668522645122, 0.455005567935784),
        (0.848331477354878, 0.499999999999998, 0.151668522645122),
        (0.151668522645122, 0.151668522645122, 0.544994432064291),
        (0.151668522645122, 0.500000000000110, 0.151668522645122),
        (0.455005567935753, 0.151668522645122, 0.151668522645122),
        (0.544994432064278, 0.500000000000158, 0.848331477354878),
        (0.500000000000050, 0.848331477354878, 0.500000000000127),
        (0.848331477354878, 0.499999999999971, 0.455005567935785),
        (0.151668522645122, 0.499999999999984, 0.544994432064408),
        (0.500000000000017, 0.151668522645122, 0.500000000000162),
        (0.455005567935662, 0.500000000000169, 0.151668522645122),
        (0.696662954709644, 0.674165738677533, 0.651668522645496),
        (0.348331477354619, 0.674165738677562, 0.696662954709711),
        (0.696662954709725, 0.325834261322519, 0.651668522645491),
        (0.348331477354553, 0.325834261322531, 0.696662954709766),
        (0.651668522645443, 0.674165738677632, 0.303337045290349),
        (0.303337045290320, 0.674165738677658, 0.348331477354639),
        (0.651668522645474, 0.325834261322413, 0.303337045290318),
        (0.303337045290211, 0.325834261322413, 0.348331477354658),
    )),
    35: (0.1516685226451, (
        (0.848331477354878, 0.848331477354878, 0.848331477354878),
        (0.151668522645122, 0.848331477354878, 0.848331477354878),
        (0.848331477354878, 0.151668522645122, 0.848331477354878),
        (0.151668522645122, 0.151668522645122, 0.848331477354878),
        (0.848331477354878, 0.848331477354878, 0.151668522645122),
        (0.151668522645122, 0.848331477354878, 0.151668522645122),
        (0.848331477354878, 0.151668522645122, 0.151668522645122),
        (0.151668522645122, 0.151668522645122, 0.151668522645122),
        (0.544994432064251, 0.848331477354878, 0.848331477354878),
        (0.848331477354878, 0.500000000000097, 0.848331477354878),
        (0.848331477354878, 0.848331477354878, 0.455005567935795),
        (0.151668522645122, 0.500000000000072, 0.848331477354878),
        (0.151668522645122, 0.848331477354878, 0.544994432064266),
        (0.544994432064278, 0.151668522645122, 0.848331477354878),
        (0.455005567935809, 0.848331477354878, 0.151668522645122),
        (0.848331477354878, 0.151668522645122, 0.455005567935784),
        (0.848331477354878, 0.499999999999998, 0.151668522645122),
        (0.151668522645122, 0.151668522645122, 0.544994432064291),
        (0.151668522645122, 0.500000000000110, 0.151668522645122),
        (0.455005567935753, 0.151668522645122, 0.151668522645122),
        (0.544994432064278, 0.500000000000158, 0.848331477354878),
        (0.500000000000050, 0.848331477354878, 0.500000000000127),
        (0.848331477354878, 0.499999999999971, 0.455005567935785),
        (0.151668522645122, 0.499999999999984, 0.544994432064408),
        (0.500000000000017, 0.151668522645122, 0.500000000000162),
        (0.455005567935662, 0.500000000000169, 0.151668522645122),
        (0.696662954709644, 0.674165738677533, 0.651668522645496),
        (0.348331477354619, 0.674165738677562, 0.696662954709711),
        (0.696662954709725, 0.325834261322519, 0.651668522645491),
        (0.348331477354553, 0.325834261322531, 0.696662954709766),
        (0.651668522645443, 0.674165738677632, 0.303337045290349),
        (0.303337045290320, 0.674165738677658, 0.348331477354639),
        (0.651668522645474, 0.325834261322413, 0.303337045290318),
        (0.303337045290211, 0.325834261322413, 0.348331477354658),
        (0.499999999999973, 0.499999999999984, 0.500000000000171),
    )),
    36: (0.1480933407759, (
        (0.850815553182956, 0.851906659224023, 0.851906659224023),
        (0.851906659224023, 0.259535305855872, 0.851906659224023),
        (0.447684686087010, 0.851906659224023, 0.851906659224023),
        (0.633417313308233, 0.766692356533392, 0.633688770923301),
        (0.358010114631002, 0.644050989234827, 0.635264224976249),
        (0.851906659224023, 0.555719977671756, 0.148093340775977),
        (0.148093340775977, 0.598805055099580, 0.401508248406455),
        (0.851906659224023, 0.148093340775977, 0.577485015128863),
        (0.447317984834116, 0.148093340775977, 0.148093340775977),
        (0.851906659224023, 0.555721987410428, 0.851906659224023),
        (0.357250305169567, 0.345948285877719, 0.851906659224023),
        (0.851906659224023, 0.851906659224023, 0.148093340775977),
        (0.193725754630869, 0.391701778707491, 0.608884146691852),
        (0.148093340775977, 0.148093340775977, 0.445667348747180),
        (0.577554148658528, 0.148093340775977, 0.844354596385627),
        (0.154090340446309, 0.806818675703237, 0.172058939109833),
        (0.433228457480334, 0.843851265528502, 0.423716990627645),
        (0.842295389964975, 0.351943317739165, 0.362823978316937),
        (0.619646350426478, 0.156188937349780, 0.392432030550748),
        (0.553778207741031, 0.573149691870683, 0.851906659224023),
        (0.148093340775977, 0.555694307891520, 0.851906659224023),
        (0.553304933456385, 0.851906659224023, 0.148093340775977),
        (0.158270899572342, 0.851906659224023, 0.555407656406496),
        (0.404090168236534, 0.154438432631690, 0.601727973389768),
        (0.148093340775977, 0.851906659224023, 0.851906659224023),
        (0.593555071274139, 0.408375662566216, 0.164926097969831),
        (0.851906659224023, 0.576832866673867, 0.556078088095099),
        (0.148093340775977, 0.148093340775977, 0.148093340775977),
        (0.823611248448756, 0.148093340775977, 0.148093340775977),
        (0.148093340775977, 0.148093340775977, 0.772703988630833),
        (0.851906659224023, 0.851906659224023, 0.444825051718534),
        (0.387515374526039, 0.361208705132325, 0.378768411631650),
        (0.148093340775977, 0.444779554528854, 0.148093340775977),
        (0.383049049448622, 0.616639131249893, 0.216125803445054),
        (0.613471272835092, 0.373885682755125, 0.599371104807003),
        (0.649972860618541, 0.649283760369638, 0.350065313223273),
    )),
    37: (0.1462979984434, (
        (0.545696810356550, 0.146297998443419, 0.379557855316483),
        (0.146297998443419, 0.146297998443419, 0.853702001556581),
        (0.853702001556581, 0.438894083859125, 0.853702001556581),
        (0.356560221063325, 0.146297998443419, 0.615778899721082),
        (0.830822309212995, 0.146297998443419, 0.496308025236879),
        (0.618671449322213, 0.847347455400193, 0.376240637113220),
        (0.413014964851407, 0.537410185112415, 0.634429886089533),
        (0.820049092769812, 0.853702001556581, 0.589456725961198),
        (0.853702001556581, 0.443300115066369, 0.561139088058612),
        (0.483115254994446, 0.853702001556581, 0.853702001556581),
        (0.388626851698246, 0.499991993899964, 0.146297998443419),
        (0.611385623832797, 0.310274670643525, 0.146297998443419),
        (0.146297998443419, 0.348234285312402, 0.641532531699740),
        (0.598086203257095, 0.311594448647096, 0.615237485870150),
        (0.156928669243987, 0.146297998443419, 0.395453257444870),
        (0.146297998443419, 0.853702001556581, 0.369041625749405),
        (0.560347343660205, 0.146297998443419, 0.853702001556581),
        (0.146297998443419, 0.628253371987179, 0.555550038546210),
        (0.369055066529609, 0.146297998443419, 0.146297998443419),
        (0.853702001556581, 0.146297998443419, 0.149038851003496),
        (0.614766156953867, 0.491772521524690, 0.383749994332417),
        (0.146297998443419, 0.561579887396454, 0.844519157321117),
        (0.349598731289493, 0.366987828715952, 0.404603882930900),
        (0.853702001556581, 0.853702001556581, 0.146297998443419),
        (0.146297998443419, 0.336012896834506, 0.146297998443419),
        (0.853702001556581, 0.474272358149593, 0.146297998443419),
        (0.630944851567288, 0.663987214964201, 0.146297998443419),
        (0.853702001556581, 0.664104622110621, 0.369155133621891),
        (0.853702001556581, 0.146297998443419, 0.853702001556581),
        (0.600622520073356, 0.585738353071605, 0.853702001556581),
        (0.353327795283222, 0.353071749126716, 0.853702001556581),
        (0.326050706678601, 0.853702001556581, 0.606732673651892),
        (0.375891483267341, 0.853702001556581, 0.146297998443419),
        (0.853702001556581, 0.732582665586674, 0.853702001556581),
        (0.168417774488351, 0.853702001556581, 0.853702001556581),
        (0.379811872158107, 0.676769430744161, 0.379304370356162),
        (0.146297998443419, 0.663971268876272, 0.146297998443419),
    )),
    38: (0.1447340409706, (
        (0.855265959029362, 0.166307925090684, 0.144734040970638),
        (0.855265959029362, 0.458009858163887, 0.144734040970638),
        (0.144734040970638, 0.147553051588862, 0.565811604004753),
        (0.607633375405804, 0.855265959029362, 0.415525830635718),
        (0.694349714697752, 0.618116148526445, 0.616879908058197),
        (0.350981323070132, 0.374426209268510, 0.355112188593161),
        (0.855265959029362, 0.374103704790606, 0.421774702046793),
        (0.557491910043448, 0.144734040970638, 0.842584673422119),
        (0.144734040970638, 0.440755692874751, 0.558870963768244),
        (0.144734040970638, 0.628206713699681, 0.328634667725445),
        (0.205208986197469, 0.855265959029362, 0.855265959029362),
        (0.854294800016907, 0.565760531237858, 0.855265959029362),
        (0.144734040970638, 0.144734040970638, 0.275366170946246),
        (0.855265959029362, 0.144734040970638, 0.598699037143406),
        (0.144734040970638, 0.756723116995823, 0.588098838528964),
        (0.405365563789689, 0.566519241635791, 0.596309393308238),
        (0.144734040970638, 0.404041121804661, 0.144734040970638),
        (0.409799843182128, 0.855265959029362, 0.649914688039323),
        (0.585201417299186, 0.751069443896545, 0.855265959029362),
        (0.341787348860976, 0.320849150353272, 0.737062311762993),
        (0.676275073792808, 0.144734040970638, 0.371203908699440),
        (0.144734040970638, 0.563001094713583, 0.855265959029362),
        (0.635666052673593, 0.333389053514654, 0.605921297897376),
        (0.844134063885819, 0.855265959029362, 0.144734040970638),
        (0.367694113035100, 0.598567103554307, 0.144734040970638),
        (0.855265959029362, 0.855265959029362, 0.565725537679680),
        (0.321003339345045, 0.855265959029362, 0.374402515307878),
        (0.849777808802103, 0.656421933912260, 0.355433587407423),
        (0.431370426798139, 0.144734040970638, 0.525520091726812),
        (0.564965821904547, 0.462309524339492, 0.855265959029362),
        (0.144734040970638, 0.855265959029362, 0.144734040970638),
        (0.576791917310335, 0.377101460978747, 0.144734040970638),
        (0.144734040970638, 0.144734040970638, 0.855265959029362),
        (0.403498023234151, 0.144734040970638, 0.144734040970638),
        (0.504143399889643, 0.855265959029362, 0.144734040970638),
        (0.570882589961081, 0.573510797746431, 0.358082438577005),
        (0.855265959029362, 0.855265959029362, 0.855265959029362),
        (0.833717266846284, 0.277024777315719, 0.855265959029362),
    )),
    39: (0.1433381633087, (
        (0.847287807864278, 0.143338163308747, 0.847491025757429),
        (0.143338163308747, 0.651510185618302, 0.343491697599841),
        (0.384922126725079, 0.856661836691253, 0.415809289828151),
        (0.385975340676964, 0.572021287945574, 0.856661836691253),
        (0.143338163308747, 0.145996778742783, 0.310561625237668),
        (0.856661836691253, 0.856661836691253, 0.143338163308747),
        (0.856661836691253, 0.568324853778421, 0.149809736813840),
        (0.856661836691253, 0.429950756143948, 0.854886130275775),
        (0.149687717244692, 0.846416563252128, 0.856661836691253),
        (0.433055730687789, 0.856328235841825, 0.813640059034394),
        (0.856661836691253, 0.856661836691253, 0.856661836691253),
        (0.856661836691253, 0.842026650830458, 0.570317800557193),
        (0.359279035948950, 0.154469945540497, 0.855731370698543),
        (0.144890372886772, 0.371538145388263, 0.489248636609262),
        (0.854635525355215, 0.556549096036457, 0.597562969118347),
        (0.610477349220176, 0.580391515131458, 0.297812766062574),
        (0.637848804883986, 0.143338163308747, 0.362311387511130),
        (0.856314782249427, 0.143338163308747, 0.143338163308747),
        (0.413695163152836, 0.371539568807836, 0.313764353207822),
        (0.167171927337759, 0.856661836691253, 0.143375996034665),
        (0.341569779101288, 0.593385065575723, 0.143338163308747),
        (0.594470752166095, 0.143338163308747, 0.666968063468714),
        (0.143338163308747, 0.143338163308747, 0.664339317863387),
        (0.614755133984987, 0.400447097605333, 0.538986445239920),
        (0.575392015222912, 0.730934168057578, 0.598549913653703),
        (0.370722858765963, 0.143338163308747, 0.486386708877904),
        (0.578262710415849, 0.358673844830333, 0.856661836691253),
        (0.665515564413817, 0.856661836691253, 0.357067150192993),
        (0.856661836691253, 0.152363400708473, 0.549229843633903),
        (0.143338163308747, 0.856661836691253, 0.570168721669780),
        (0.153696548591073, 0.357437741673472, 0.856470386915878),
        (0.474302287929106, 0.856661836691253, 0.143338163308747),
        (0.143338163308747, 0.602407160231010, 0.706109450880075),
        (0.664363925786163, 0.643131505591791, 0.856661836691253),
        (0.644756598629462, 0.338178517657586, 0.145965688007880),
        (0.355795791334223, 0.565345534513766, 0.517071808195988),
        (0.143338163308747, 0.383249843373181, 0.143338163308747),
        (0.854053478724640, 0.359451324001615, 0.349624794430507),
        (0.377197361638044, 0.143338163308747, 0.143338163308747),
    )),
    40: (0.1432405671670, (
        (0.855112939606264, 0.341837626669626, 0.649191546888796),
        (0.521162850707863, 0.143240567167069, 0.165123410463252),
        (0.856759432832931, 0.143240567167069, 0.856759432832931),
        (0.143240567167069, 0.852954852651510, 0.429696437243564),
        (0.856759432832931, 0.856759432832931, 0.856759432832931),
        (0.520482589942862, 0.854837403735296, 0.856759432832931),
        (0.687718009621563, 0.375457326150227, 0.143240567167069),
        (0.143240567167069, 0.153404189594867, 0.856759432832931),
        (0.661417656983326, 0.642107670954037, 0.353636043676450),
        (0.643825912387496, 0.336472173181837, 0.855852011652770),
        (0.143240567167069, 0.440066152774361, 0.837973505294150),
        (0.143240567167069, 0.856759432832931, 0.143240567167069),
        (0.856759432832931, 0.143240567167069, 0.149456156299321),
        (0.716202835850751, 0.856759432832931, 0.143240567167069),
        (0.478203220937602, 0.856759432832931, 0.427971185600372),
        (0.143240567167069, 0.143240567167069, 0.268854175322909),
        (0.854042778876071, 0.143921211497459, 0.437169420644619),
        (0.360838306846954, 0.358471375955209, 0.636973464854253),
        (0.143240567167069, 0.570174167467143, 0.150004959932214),
        (0.856759432832931, 0.856759432832931, 0.392870860550017),
        (0.394135669525108, 0.587226971251320, 0.856759432832931),
        (0.143240567167069, 0.602973184280584, 0.597786928738087),
        (0.614795010441345, 0.146772969763601, 0.631534392590566),
        (0.478219326030931, 0.573591885705005, 0.143240567167069),
        (0.143240567167069, 0.726842692699139, 0.856759432832931),
        (0.854409724778294, 0.623156004790096, 0.590989528606854),
        (0.692046365865242, 0.621403314089295, 0.854502193646912),
        (0.350571548715236, 0.601117056333776, 0.399090111466210),
        (0.856759432832931, 0.606907325947238, 0.143240567167069),
        (0.687845670915394, 0.856759432832931, 0.624257077445067),
        (0.387806782644128, 0.143240567167069, 0.419408493927081),
        (0.312281033216760, 0.338269293058156, 0.143240567167069),
        (0.550084027536208, 0.572818590512802, 0.609236828076608),
        (0.431257061230253, 0.143240567167069, 0.853846478770246),
        (0.143240567167069, 0.402516792488842, 0.392168738466940),
        (0.309509181475557, 0.856719843445591, 0.662960264427631),
        (0.574249222971739, 0.367948117566340, 0.408233827137640),
        (0.429721701506520, 0.856759432832931, 0.143240567167069),
        (0.856759432832931, 0.426638523219939, 0.374720985240855),
        (0.143240567167069, 0.152899902273919, 0.569556841948429),
    )),
    41: (0.1423427500998, (
        (0.857657249900121, 0.572043803722325, 0.453059676402588),
        (0.655477419858451, 0.148097688599026, 0.314194030015959),
        (0.346855361511436, 0.857657249900121, 0.340440778876913),
        (0.142342750099879, 0.619879661181496, 0.701029988262382),
        (0.612276345314515, 0.631822264621784, 0.315056002940572),
        (0.427619650772154, 0.142342750099879, 0.142342750099879),
        (0.606805200201476, 0.394826118475955, 0.152168191870168),
        (0.428277236795670, 0.142342750099879, 0.857657249900121),
        (0.382004726632690, 0.628664240824369, 0.516196406079099),
        (0.593079431430119, 0.143983127563144, 0.624396260336661),
        (0.842626156022876, 0.377061303814725, 0.678805886802779),
        (0.608016578703807, 0.367922222630174, 0.850105543560236),
        (0.142342750099879, 0.142342750099879, 0.857657249900121),
        (0.857657249900121, 0.857657249900121, 0.426433937565537),
        (0.378171074896636, 0.857657249900121, 0.698135857636605),
        (0.582643885833628, 0.857657249900121, 0.500010316987307),
        (0.857657249900121, 0.143663356951311, 0.855104535780953),
        (0.650801578924314, 0.621920656368018, 0.654317303343447),
        (0.857657249900121, 0.599545264889256, 0.857657249900121),
        (0.841994534963559, 0.847031066938370, 0.142342750099879),
        (0.372224154129405, 0.421357536960621, 0.316409520156762),
        (0.613665366114718, 0.845142993232728, 0.857657249900121),
        (0.142342750099879, 0.653157049728162, 0.340430760107373),
        (0.247891025754314, 0.406798146082253, 0.857657249900121),
        (0.142342750099879, 0.142342750099879, 0.572925692782185),
        (0.353237211042143, 0.649058966853251, 0.142342750099879),
        (0.142342750099879, 0.857657249900121, 0.538558734038164),
        (0.395493472994487, 0.357431674838858, 0.619216921137358),
        (0.142342750099879, 0.857657249900121, 0.857657249900121),
        (0.857657249900121, 0.845175783045233, 0.710895458942208),
        (0.439093076621713, 0.619514047146863, 0.847759905483135),
        (0.557451899462841, 0.857657249900121, 0.142342750099879),
        (0.142342750099879, 0.441903398812804, 0.142342750099879),
        (0.142342750099879, 0.155105585706981, 0.154956522624677),
        (0.387802334458668, 0.146285023256904, 0.425353657911889),
        (0.857657249900121, 0.142342750099879, 0.516124463690139),
        (0.636868583543943, 0.389669004600612, 0.467909643650908),
        (0.841402722233962, 0.562003535301499, 0.142342750099879),
        (0.857657249900121, 0.254885725369110, 0.142342750099879),
        (0.142342750099879, 0.857657249900121, 0.142342750099879),
        (0.142342750099879, 0.417708461933587, 0.500528988409852),
    )),
    42: (0.1409661695445, (
        (0.859033830455397, 0.140966169544603, 0.859033830455397),
        (0.170706759025455, 0.140966169544603, 0.859033830455397),
        (0.859033830455397, 0.629929404211728, 0.859033830455397),
        (0.597106918063588, 0.628764818207959, 0.639652550567794),
        (0.859033830455397, 0.395648673646208, 0.698278086830807),
        (0.596614052252781, 0.859033830455397, 0.476010441573308),
        (0.859033830455397, 0.140966169544603, 0.576269004641122),
        (0.641072786195433, 0.609696627547279, 0.347467062432123),
        (0.390047472004319, 0.641363484413929, 0.141224597905145),
        (0.859033830455397, 0.417710222977188, 0.140979751883688),
        (0.368103285021443, 0.345160079471440, 0.859033830455397),
        (0.405448900162687, 0.859033830455397, 0.683711283595436),
        (0.140966169544603, 0.150993046607383, 0.140966169544603),
        (0.575656974197214, 0.140966169544603, 0.140966169544603),
        (0.142173764623779, 0.505438686207569, 0.140966169544603),
        (0.420912023623186, 0.433584633683891, 0.379515017972486),
        (0.140966169544603, 0.403831402258555, 0.403949798907645),
        (0.633640091149879, 0.451368703297919, 0.859033830455397),
        (0.571617886131564, 0.348572451325175, 0.603425361081290),
        (0.143424624331942, 0.360084002927613, 0.683260037973462),
        (0.857524918624200, 0.140966169544603, 0.204279832483543),
        (0.624393478117973, 0.140966169544603, 0.419128228532312),
        (0.802425683300807, 0.369740351741596, 0.415885984056388),
        (0.578327206050553, 0.859033830455397, 0.140966169544603),
        (0.297215501703106, 0.603004541057370, 0.599237215308116),
        (0.140966169544603, 0.682431795839869, 0.360733314545219),
        (0.418847658208365, 0.636907143424531, 0.859033830455397),
        (0.140966169544603, 0.140966169544603, 0.505870059168623),
        (0.859033830455397, 0.624043670183347, 0.529713518726306),
        (0.140966169544603, 0.580500459083277, 0.859033830455397),
        (0.359662795968120, 0.859033830455397, 0.322148927079436),
        (0.628569985344191, 0.858732477867039, 0.859033830455397),
        (0.358000878917039, 0.155039776032857, 0.322829351725885),
        (0.859033830455397, 0.859033830455397, 0.370545507983722),
        (0.575197854766565, 0.425375441848388, 0.140966169544603),
        (0.140966169544603, 0.859033830455397, 0.580500461733459),
        (0.575870824310625, 0.140966169544603, 0.859033830455397),
        (0.184613039527170, 0.859033830455397, 0.859033830455397),
        (0.857877877469316, 0.859033830455397, 0.690317439461030),
        (0.140966169544603, 0.859033830455397, 0.140966169544603),
        (0.815149819197103, 0.698406715029617, 0.140966169544603),
        (0.383751384183013, 0.140966169544603, 0.649852235992156),
    )),
    43: (0.1406561551460, (
        (0.859343844853989, 0.140656155146011, 0.549549603614379),
        (0.400071654304443, 0.513465775387105, 0.859343844853989),
        (0.140656155146011, 0.468023003349996, 0.632420860775904),
        (0.859343844853989, 0.859343844853989, 0.460388949577231),
        (0.140656155146011, 0.579124188174292, 0.373977167374103),
        (0.413496128843963, 0.646884285951806, 0.363802009969983),
        (0.725387603202668, 0.395303463838983, 0.610110091361305),
        (0.412321925518139, 0.859343844853989, 0.859343844853989),
        (0.725006486162890, 0.605439133910458, 0.399421479508914),
        (0.597751827534594, 0.859343844853989, 0.356918024179031),
        (0.859343844853989, 0.140656155146011, 0.859343844853989),
        (0.140656155146011, 0.421968465451648, 0.140656155146011),
        (0.393622326968670, 0.859343844853989, 0.140656155146011),
        (0.859343844853989, 0.352796786797391, 0.358831973032259),
        (0.140656155146011, 0.140656155146011, 0.628732957848285),
        (0.859343844853989, 0.649627140364255, 0.653358310161134),
        (0.660456566693604, 0.140656155146011, 0.347177673973462),
        (0.859343844853989, 0.859343844853989, 0.859343844853989),
        (0.389317215722099, 0.859343844853989, 0.553711011887860),
        (0.371267042151441, 0.140656155146011, 0.859343844853989),
        (0.655663767566762, 0.652136859173169, 0.859343844853989),
        (0.140656155146011, 0.295512803320855, 0.393718535120527),
        (0.140656155146011, 0.736279910894307, 0.140656155146011),
        (0.140656155146011, 0.859343844853989, 0.690479902622315),
        (0.859343844853989, 0.859343844853989, 0.140656155146011),
        (0.140656155146011, 0.859343844853989, 0.408632088941176),
        (0.140656155146011, 0.634283567614007, 0.859343844853989),
        (0.605384492979667, 0.310085874144126, 0.859343844853989),
        (0.380284497246392, 0.140656155146011, 0.421795147660381),
        (0.859343844853989, 0.443452951037789, 0.859343844853989),
        (0.450518761761861, 0.140656155146011, 0.140656155146011),
        (0.859343844853989, 0.140656155146011, 0.140656155146011),
        (0.610244737624024, 0.679868645648720, 0.140656155146011),
        (0.390197077780922, 0.338301639883518, 0.638725969297820),
        (0.140656155146011, 0.301762439090144, 0.859343844853989),
        (0.859343844853989, 0.549154259655231, 0.140656155146011),
        (0.529122613774549, 0.389807059322023, 0.398124879170393),
        (0.590958148482653, 0.140656155146011, 0.634506769817527),
        (0.665904085291561, 0.344905207392003, 0.140656155146011),
        (0.140656155146011, 0.140656155146011, 0.140656155146011),
        (0.416804978053787, 0.475619593384655, 0.140656155146011),
        (0.655779754480690, 0.859343844853989, 0.656627428028013),
        (0.520509992142508, 0.596362723477094, 0.619012160078017),
    )),
    44: (0.1392061401686, (
        (0.364897257860824, 0.163781929536514, 0.139206140168676),
        (0.643337200563334, 0.860793859831324, 0.685194698932341),
        (0.860793859831324, 0.693437240388244, 0.637294893253927),
        (0.155675554082438, 0.139206140168676, 0.580893736159284),
        (0.139206140168676, 0.519694481490085, 0.377797988321087),
        (0.139206140168676, 0.671717212707259, 0.139206140168676),
        (0.589645074578851, 0.383521466540026, 0.139206140168676),
        (0.642422890708475, 0.623466070051205, 0.283471914490369),
        (0.613896269376213, 0.139206140168676, 0.270489416687830),
        (0.860793859831324, 0.446701638265425, 0.139206140168676),
        (0.622817363875032, 0.645643440490794, 0.860793859831324),
        (0.860793859831324, 0.165743418916765, 0.860793859831324),
        (0.648600439167128, 0.341853586772892, 0.458220689595036),
        (0.576152040111936, 0.860793859831324, 0.414911377321631),
        (0.139206140168676, 0.860793859831324, 0.369689196121564),
        (0.860793859831324, 0.725113918604769, 0.139206140168676),
        (0.860793859831324, 0.333721003328673, 0.638279599835742),
        (0.412435933297572, 0.373849555245319, 0.602151165910948),
        (0.385853968300854, 0.645447824835413, 0.412844170363808),
        (0.609550115709840, 0.593228203253152, 0.571354558401277),
        (0.142066200619041, 0.860793859831324, 0.844351002033062),
        (0.860793859831324, 0.145250272601356, 0.139206140168676),
        (0.860793859831324, 0.860793859831324, 0.388582206695780),
        (0.620092709455973, 0.372365817383293, 0.802865368257337),
        (0.154640963630772, 0.370135187251552, 0.139206140168676),
        (0.139206140168676, 0.139206140168676, 0.302020269179322),
        (0.340062069534512, 0.860793859831324, 0.176893206842161),
        (0.860793859831324, 0.501055404879841, 0.860793859831324),
        (0.425869115434721, 0.860793859831324, 0.860793859831324),
        (0.477980072193330, 0.139206140168676, 0.860793859831324),
        (0.310111451272007, 0.361722927362158, 0.860793859831324),
        (0.357440564316273, 0.860793859831324, 0.587359267329019),
        (0.374917650585484, 0.382584861641672, 0.318951118791782),
        (0.406260017379011, 0.593004923259753, 0.139206140168676),
        (0.860793859831324, 0.860161591303039, 0.860793859831324),
        (0.660936146294648, 0.139206140168676, 0.649704631703731),
        (0.860793859831324, 0.149297593131745, 0.421742631289608),
        (0.139206140168676, 0.140868376519404, 0.860793859831324),
        (0.139206140168676, 0.687835450252611, 0.600887383731060),
        (0.380120265861908, 0.620795234562408, 0.726645899522741),
        (0.139206140168676, 0.582349082152877, 0.860793859831324),
        (0.139206140168676, 0.411253436115371, 0.640358857365007),
        (0.617115934767000, 0.860793859831324, 0.139206140168676),
        (0.860793859831324, 0.518057712637578, 0.420280524877553),
    )),
    45: (0.1392061401686, (
        (0.364897257860824, 0.163781929536514, 0.139206140168676),
        (0.643337200563334, 0.860793859831324, 0.685194698932341),
        (0.860793859831324, 0.693437240388244, 0.637294893253927),
        (0.155675554082438, 0.139206140168676, 0.580893736159284),
        (0.139206140168676, 0.519694481490085, 0.377797988321087),
        (0.139206140168676, 0.671717212707259, 0.139206140168676),
        (0.589645074578851, 0.383521466540026, 0.139206140168676),
        (0.642422890708475, 0.623466070051205, 0.283471914490369),
        (0.613896269376213, 0.139206140168676, 0.270489416687830),
        (0.860793859831324, 0.446701638265425, 0.139206140168676),
        (0.622817363875032, 0.645643440490794, 0.860793859831324),
        (0.860793859831324, 0.165743418916765, 0.860793859831324),
        (0.648600439167128, 0.341853586772892, 0.458220689595036),
        (0.576152040111936, 0.860793859831324, 0.414911377321631),
        (0.139206140168676, 0.860793859831324, 0.369689196121564),
        (0.860793859831324, 0.725113918604769, 0.139206140168676),
        (0.860793859831324, 0.333721003328673, 0.638279599835742),
        (0.412435933297572, 0.373849555245319, 0.602151165910948),
        (0.385853968300854, 0.645447824835413, 0.412844170363808),
        (0.609550115709840, 0.593228203253152, 0.571354558401277),
        (0.142066200619041, 0.860793859831324, 0.844351002033062),
        (0.860793859831324, 0.145250272601356, 0.139206140168676),
        (0.860793859831324, 0.860793859831324, 0.388582206695780),
        (0.620092709455973, 0.372365817383293, 0.802865368257337),
        (0.154640963630772, 0.370135187251552, 0.139206140168676),
        (0.139206140168676, 0.139206140168676, 0.302020269179322),
        (0.340062069534512, 0.860793859831324, 0.176893206842161),
        (0.860793859831324, 0.501055404879841, 0.860793859831324),
        (0.425869115434721, 0.860793859831324, 0.860793859831324),
        (0.477980072193330, 0.139206140168676, 0.860793859831324),
        (0.310111451272007, 0.361722927362158, 0.860793859831324),
        (0.357440564316273, 0.860793859831324, 0.587359267329019),
        (0.374917650585484, 0.382584861641672, 0.318951118791782),
        (0.406260017379011, 0.593004923259753, 0.139206140168676),
        (0.860793859831324, 0.860161591303039, 0.860793859831324),
        (0.660936146294648, 0.139206140168676, 0.649704631703731),
        (0.860793859831324, 0.149297593131745, 0.421742631289608),
        (0.139206140168676, 0.140868376519404, 0.860793859831324),
        (0.139206140168676, 0.687835450252611, 0.600887383731060),
        (0.380120265861908, 0.620795234562408, 0.726645899522741),
        (0.139206140168676, 0.582349082152877, 0.860793859831324),
        (0.139206140168676, 0.411253436115371, 0.640358857365007),
        (0.617115934767000, 0.860793859831324, 0.139206140168676),
        (0.860793859831324, 0.518057712637578, 0.420280524877553),
        (0.403004154422013, 0.139206140168676, 0.452252761985769),
    )),
    46: (0.1373998882028, (
        (0.862600111797165, 0.862600111797165, 0.862600111797165),
        (0.137399888202835, 0.412764785216391, 0.137399888202835),
        (0.473616467763242, 0.137399888202835, 0.137399888202835),
        (0.862600111797165, 0.402850343670295, 0.597158772040182),
        (0.551981739249568, 0.600512834547884, 0.621854792675673),
        (0.137399888202835, 0.526095799595725, 0.862600111797165),
        (0.862600111797165, 0.668285912603834, 0.668285031165498),
        (0.588968706413582, 0.618966407854208, 0.137399888202835),
        (0.137399888202835, 0.137399888202835, 0.137399888202835),
        (0.526062334020526, 0.137399888202835, 0.862600111797165),
        (0.654075432843374, 0.344959139856028, 0.137399888202835),
        (0.668311230263105, 0.137399888202835, 0.331736660413090),
        (0.331544750966117, 0.137399888202835, 0.668319074997255),
        (0.137399888202835, 0.862600111797165, 0.587336141212956),
        (0.331674250602538, 0.331744409436381, 0.862600111797165),
        (0.420315615637449, 0.647861489407523, 0.384641804530416),
        (0.862600111797165, 0.331736569496320, 0.331692743617097),
        (0.254840679102034, 0.614073744952307, 0.618359965415131),
        (0.606306802107133, 0.221161587216987, 0.604387867980836),
        (0.862600111797165, 0.526069533180764, 0.137399888202835),
        (0.137399888202835, 0.433044832456152, 0.411618567770812),
        (0.137399888202835, 0.332268286224034, 0.667777511582559),
        (0.473984291231482, 0.862600111797165, 0.862600111797165),
        (0.862600111797165, 0.597165535756041, 0.402843566261902),
        (0.862600111797165, 0.137399888202835, 0.137399888202835),
        (0.862600111797165, 0.473964372573156, 0.862600111797165),
        (0.597160505934849, 0.402843015152757, 0.862600111797165),
        (0.668289482692170, 0.668279521305364, 0.862600111797165),
        (0.666305099267088, 0.862600111797165, 0.666284186437860),
        (0.387315721052349, 0.382566660992654, 0.542352187100348),
        (0.137399888202835, 0.862600111797165, 0.137399888202835),
        (0.137399888202835, 0.862600111797165, 0.862600111797165),
        (0.389022412537430, 0.386265266534006, 0.255402868660985),
        (0.862600111797165, 0.862600111797165, 0.137399888202835),
        (0.402850303764686, 0.597166611191828, 0.862600111797165),
        (0.137399888202835, 0.137399888202835, 0.473838298652842),
        (0.621006756075114, 0.448961249929301, 0.398678991646022),
        (0.402897527484497, 0.137399888202835, 0.402944234756181),
        (0.862600111797165, 0.862600111797165, 0.473973466196540),
        (0.455147914996285, 0.862600111797165, 0.137399888202835),
        (0.862600111797165, 0.137399888202835, 0.526088021873003),
        (0.862600111797165, 0.137399888202835, 0.862600111797165),
        (0.137399888202835, 0.703930991728863, 0.362369806653141),
        (0.607567304586511, 0.862600111797165, 0.366780359373373),
        (0.299641863990989, 0.635301716612886, 0.137399888202835),
        (0.411600122375705, 0.862600111797165, 0.561603141626830),
    )),
    47: (0.1366325822326, (
        (0.863367417767309, 0.409953731819201, 0.136632582232691),
        (0.500627319299972, 0.136632582232691, 0.861112558151202),
        (0.863367417767309, 0.137103401624215, 0.863367417767309),
        (0.409428257875469, 0.394262830618054, 0.862766857723293),
        (0.137978246650629, 0.136632582232691, 0.395408853021777),
        (0.411861010982484, 0.863367417767309, 0.612250286092146),
        (0.383570132724363, 0.466910948988952, 0.593433491492526),
        (0.413091984837424, 0.136632582232691, 0.396669912812210),
        (0.657937640691955, 0.863367417767309, 0.136632582232691),
        (0.136632582232691, 0.136632582232691, 0.860773038392809),
        (0.859606938477770, 0.863367417767309, 0.863367417767309),
        (0.863367417767309, 0.590056886570339, 0.863367417767309),
        (0.136632582232691, 0.666815433813331, 0.136632582232691),
        (0.143715994391163, 0.335580308414847, 0.592647297485726),
        (0.142031502551398, 0.559296834349463, 0.388433067330382),
        (0.596702070347834, 0.396673768973229, 0.437352341323156),
        (0.136632582232691, 0.863367417767309, 0.590125608512989),
        (0.590484500034748, 0.395504940542625, 0.136632582232691),
        (0.229721185704503, 0.136632582232691, 0.137973283487268),
        (0.320851592715870, 0.136632582232691, 0.653985478789370),
        (0.606043537685393, 0.641489182400675, 0.583387573977852),
        (0.519828715760416, 0.863367417767309, 0.863367417767309),
        (0.384672346388563, 0.863367417767309, 0.136632582232691),
        (0.502986203784379, 0.136632582232691, 0.138374702699265),
        (0.182776314261268, 0.863367417767309, 0.320784486128691),
        (0.136632582232691, 0.393550133826841, 0.136632582232691),
        (0.344497786032196, 0.389450221800711, 0.318582350136863),
        (0.858038900520134, 0.136632582232691, 0.138876369733899),
        (0.390094859519002, 0.673007449965508, 0.404385443173493),
        (0.316548313689072, 0.653942596329373, 0.863367417767309),
        (0.863367417767309, 0.611220334506485, 0.480282623728474),
        (0.681448496817031, 0.341592737212692, 0.863367417767309),
        (0.771343786800398, 0.858147047435734, 0.604713323536321),
        (0.586329177865699, 0.863367417767309, 0.401821083798985),
        (0.399018992876735, 0.590478996046883, 0.136632582232691),
        (0.637402534541500, 0.620202110898695, 0.285338293057754),
        (0.136632582232691, 0.859788024587819, 0.863367417767309),
        (0.136632582232691, 0.410931731456598, 0.863367417767309),
        (0.863367417767309, 0.683197984326190, 0.140025510724655),
        (0.686757142334376, 0.136632582232691, 0.354050433955931),
        (0.863367417767309, 0.399215497660604, 0.667686827894049),
        (0.863367417767309, 0.136632582232691, 0.583551130160791),
        (0.594976512416445, 0.182650182816953, 0.607384604656693),
        (0.863367417767309, 0.339942196494903, 0.400839638691434),
        (0.590202969865132, 0.599262766989257, 0.863367417767309),
        (0.136632582232691, 0.599077753803223, 0.665024862924813),
        (0.863367417767309, 0.861972160459154, 0.346827564851318),
    )),
    48: (0.1361637191873, (
        (0.658283089475660, 0.863836280812663, 0.598502763364124),
        (0.390525741601983, 0.863836280812663, 0.311015192604607),
        (0.601124091248416, 0.136163719187337, 0.136163719187337),
        (0.136163719187337, 0.863836280812663, 0.863836280812663),
        (0.609194766901109, 0.602329617738887, 0.657632958636400),
        (0.156533528393682, 0.669882940442483, 0.673750351920023),
        (0.149616003099734, 0.474987388407375, 0.863836280812663),
        (0.390246931284284, 0.338332951882351, 0.863836280812663),
        (0.136163719187337, 0.602017126535108, 0.408493993039283),
        (0.651465968567915, 0.419599175549142, 0.863836280812663),
        (0.863836280812663, 0.330058507854012, 0.400054780910082),
        (0.632512951552990, 0.275143363718749, 0.631756050254460),
        (0.366230621464679, 0.863836280812663, 0.717668031361607),
        (0.863836280812663, 0.796654808486475, 0.136163719187337),
        (0.136163719187337, 0.408492239734413, 0.600093449929144),
        (0.599610260004019, 0.863836280812663, 0.136163719187337),
        (0.328784905888696, 0.136163719187337, 0.136163719187337),
        (0.671379618431158, 0.136163719187337, 0.400744018934486),
        (0.376757122266499, 0.682769217157224, 0.514058271233611),
        (0.136163719187337, 0.136163719187337, 0.601071295745960),
        (0.408057958978009, 0.426829327598715, 0.602556944724662),
        (0.863836280812663, 0.683809089161788, 0.604557921412689),
        (0.614467724166663, 0.701753543640320, 0.382532215733270),
        (0.863836280812663, 0.595850441004383, 0.863836280812663),
        (0.675057716531721, 0.598472778832916, 0.136163719187337),
        (0.863836280812663, 0.416614030039759, 0.658513199459940),
        (0.863836280812663, 0.136163719187337, 0.593669122601104),
        (0.207720645269237, 0.136163719187337, 0.863836280812663),
        (0.595397703207879, 0.835150992285969, 0.863836280812663),
        (0.136163719187337, 0.329190241231689, 0.136163719187337),
        (0.398996858215363, 0.136518950651952, 0.400356676987213),
        (0.599151284679206, 0.136163719187337, 0.863836280812663),
        (0.139226105039266, 0.863836280812663, 0.483361842054147),
        (0.136163719187337, 0.601669391985552, 0.136163719187337),
        (0.847964866443528, 0.863836280812663, 0.400286772286793),
        (0.597708919536545, 0.404950984927843, 0.390983274274872),
        (0.136163719187337, 0.136163719187337, 0.328688289846982),
        (0.401860137015797, 0.136163719187337, 0.672787147818469),
        (0.863836280812663, 0.597447189637872, 0.335204409438020),
        (0.863836280812663, 0.401851369609434, 0.136163719187337),
        (0.394884819281408, 0.627803360992168, 0.853689403726137),
        (0.472205142771629, 0.378574995842687, 0.136163719187337),
        (0.862732523587569, 0.218867055807388, 0.863836280812663),
        (0.863836280812663, 0.136163719187337, 0.207991268787513),
        (0.863836280812663, 0.863836280812663, 0.814120663478262),
        (0.406071498468189, 0.644684108351050, 0.149687710420317),
        (0.137100314914977, 0.863836280812663, 0.210648350789120),
        (0.299941585918691, 0.387422762182260, 0.350057508533536),
    )),
    49: (0.1354099555588, (
        (0.813916038066675, 0.401605622869472, 0.864590044441135),
        (0.609238685370503, 0.578962000908568, 0.864590044441135),
        (0.864590044441135, 0.210869788104993, 0.135409955558865),
        (0.416430182198740, 0.864590044441135, 0.135409955558865),
        (0.366651450841728, 0.732683587412155, 0.628867995756403),
        (0.589798186978167, 0.583088788729713, 0.594486838269350),
        (0.593743179285891, 0.135409955558865, 0.864590044441135),
        (0.864590044441135, 0.669197816695238, 0.864590044441135),
        (0.135409955558865, 0.135409955558865, 0.406233799242489),
        (0.864590044441135, 0.594007786404404, 0.135409955558865),
        (0.601662541666916, 0.322995561438711, 0.669417432495319),
        (0.135409955558865, 0.864590044441135, 0.864590044441135),
        (0.601088918473694, 0.666470912934940, 0.135409955558865),
        (0.586421388566557, 0.135409955558865, 0.474667409113515),
        (0.135409955558865, 0.423911374314758, 0.405818885210670),
        (0.406229866731472, 0.864590044441135, 0.864590044441135),
        (0.135409955558865, 0.864590044441135, 0.135409955558865),
        (0.677049777913109, 0.864590044441135, 0.864590044441135),
        (0.370504803625870, 0.135409955558865, 0.271789563161639),
        (0.135409955558865, 0.135409955558865, 0.864590044441135),
        (0.135409955558865, 0.686733746237108, 0.340270387777798),
        (0.673150165097959, 0.402438591011371, 0.135409955558865),
        (0.135409955558865, 0.279951640508510, 0.635255910572684),
        (0.451063123855995, 0.358736609184164, 0.402108102874166),
        (0.864590044441135, 0.135409955558865, 0.864590044441135),
        (0.135409955558865, 0.864590044441135, 0.579112583765938),
        (0.135409955558865, 0.593927273006547, 0.653717147245588),
        (0.864590044441135, 0.864590044441135, 0.398381802763950),
        (0.404665310809178, 0.366883838161155, 0.135409955558865),
        (0.135409955558865, 0.423997741942247, 0.864590044441135),
        (0.864590044441135, 0.555545013761144, 0.607185495819814),
        (0.371700804496895, 0.290476083033865, 0.864590044441135),
        (0.864590044441135, 0.271461992026054, 0.629960572729480),
        (0.332913863032627, 0.864590044441135, 0.393800191856761),
        (0.732725831382868, 0.629833484071165, 0.369242411777985),
        (0.864590044441135, 0.135409955558865, 0.395788235972519),
        (0.799830529713357, 0.864590044441135, 0.135409955558865),
        (0.457964091202617, 0.626465738635204, 0.361832179899987),
        (0.601827665369634, 0.864590044441135, 0.603643821016169),
        (0.339404943059376, 0.602139646607219, 0.864590044441135),
        (0.361514402007016, 0.445278115157355, 0.642598179005767),
        (0.373338470771798, 0.135409955558865, 0.642340816135686),
        (0.135409955558865, 0.135409955558865, 0.135409955558865),
        (0.303895671690149, 0.618258137826439, 0.135409955558865),
        (0.721275436154450, 0.363974723761731, 0.419602632725251),
        (0.864590044441135, 0.864590044441135, 0.669213298849655),
        (0.135409955558865, 0.406229866712046, 0.135409955558865),
        (0.604489419845943, 0.135409955558865, 0.135409955558865),
        (0.601824774725615, 0.864590044441135, 0.332823909841736),
    )),
    50: (0.1341640305801, (
        (0.865835969419888, 0.596259840280647, 0.865835969419888),
        (0.134164030580112, 0.134164030580112, 0.831025957621665),
        (0.134164030580112, 0.342257284307510, 0.328350527929345),
        (0.162605123184983, 0.627023769808855, 0.707719489928538),
        (0.395767987118900, 0.598166976567944, 0.134164030580112),
        (0.366038420102236, 0.134164030580112, 0.632968399236908),
        (0.865835969419888, 0.404791106874609, 0.134164030580112),
        (0.134164030580112, 0.134164030580112, 0.497934270616095),
        (0.865835969419888, 0.865835969419888, 0.865835969419888),
        (0.402492091745314, 0.865835969419888, 0.400686242715451),
        (0.369061888339386, 0.545185378978773, 0.865835969419888),
        (0.401800944630483, 0.865835969419888, 0.865835969419888),
        (0.865835969419888, 0.865835969419888, 0.134164030580112),
        (0.137986222887160, 0.597790382103921, 0.429657731596489),
        (0.865835969419888, 0.265782880659556, 0.363677998465186),
        (0.596302439071182, 0.402490044309252, 0.865835969419888),
        (0.596621456662182, 0.417609272678110, 0.134164030580112),
        (0.134164030580112, 0.152638092846250, 0.134164030580112),
        (0.134164030580112, 0.841990873696394, 0.865835969419888),
        (0.632490573503443, 0.403215202046492, 0.403436132288851),
        (0.865835969419888, 0.635313538147970, 0.271493405036038),
        (0.518085913926094, 0.134164030580112, 0.134164030580112),
        (0.865835969419888, 0.496305311932457, 0.501007372917732),
        (0.834019126412564, 0.365222718453548, 0.733135233717879),
        (0.644339573123794, 0.699774872794261, 0.134164030580112),
        (0.331534306632032, 0.336326433497258, 0.134164030580112),
        (0.425600056575639, 0.659058745028220, 0.570123988924150),
        (0.821117234450096, 0.134164030580112, 0.134164030580112),
        (0.433570361427829, 0.865835969419888, 0.134164030580112),
        (0.865835969419888, 0.134164030580112, 0.865835969419888),
        (0.134164030580112, 0.865835969419888, 0.400686242714698),
        (0.633818457025138, 0.731047904851579, 0.865835969419888),
        (0.364415443638193, 0.267477564296642, 0.865835969419888),
        (0.865835969419888, 0.733399227449176, 0.632149055594890),
        (0.597350658644512, 0.134164030580112, 0.865835969419888),
        (0.134164030580112, 0.411180205254921, 0.865835969419888),
        (0.266920248877968, 0.865835969419888, 0.633872294849955),
        (0.373896596340224, 0.212475166941701, 0.374014972795102),
        (0.165242300259772, 0.865835969419888, 0.134164030580112),
        (0.635421994838845, 0.674282616467359, 0.403544893408039),
        (0.865835969419888, 0.134164030580112, 0.597507908254909),
        (0.134164030580112, 0.384544087470759, 0.595920584303970),
        (0.632223514526266, 0.134164030580112, 0.377176870185094),
        (0.134164030580112, 0.534553542084858, 0.140929965405806),
        (0.621997312414984, 0.243881606830978, 0.622035984180147),
        (0.823581476638130, 0.865835969419888, 0.402412669442724),
        (0.629231970085754, 0.862178388336652, 0.599173384158883),
        (0.375385820094458, 0.481099436438444, 0.375452538880840),
        (0.403940911732284, 0.399786920541236, 0.635766588513361),
        (0.659234816991374, 0.561724972845037, 0.659235626362965),
    )),
    51: (0.1328035828261, (
        (0.431844282797313, 0.867196417173866, 0.845969901177474),
        (0.675261487230819, 0.867196417173866, 0.376187993025607),
        (0.303300218136342, 0.867196417173866, 0.132803582826135),
        (0.132803582826135, 0.147337164110742, 0.132803582826135),
        (0.400888686663874, 0.132803582826135, 0.867196417173866),
        (0.632713861429693, 0.273095333714885, 0.867196417173866),
        (0.396913378188373, 0.579584348271585, 0.394910018640787),
        (0.132803582826135, 0.402591197772056, 0.867196417173866),
        (0.400039175090853, 0.867196417173866, 0.402029564690479),
        (0.132803582826135, 0.856930370577583, 0.601873917066667),
        (0.292600349430039, 0.642012651137386, 0.867196417173866),
        (0.368931052757598, 0.713092437459970, 0.622812949802133),
        (0.867196417173866, 0.592304441842800, 0.132803582826135),
        (0.398531173768948, 0.398443714484279, 0.867196417173866),
        (0.867196417173866, 0.132803582826135, 0.313506469312482),
        (0.409125323048386, 0.394867813851052, 0.599187375812045),
        (0.602614445154888, 0.586038246616662, 0.848836749845627),
        (0.867196417173866, 0.683696824198663, 0.382192032626126),
        (0.858562956739684, 0.865366077070113, 0.638133859345315),
        (0.865908565148434, 0.405747045766641, 0.400684335576122),
        (0.562058811945559, 0.132803582826135, 0.653015990752212),
        (0.867196417173866, 0.565856394570748, 0.620227323269882),
        (0.575341483973885, 0.388250814847033, 0.132803582826135),
        (0.404983039084439, 0.621801208942468, 0.132803582826135),
        (0.867196417173866, 0.663598059703094, 0.867196417173866),
        (0.132803582826135, 0.348686886734091, 0.335747273591099),
        (0.301798528393546, 0.377026971746563, 0.132803582826135),
        (0.136817344470193, 0.658354978829895, 0.132803582826135),
        (0.717127108196088, 0.346793729090595, 0.626385045481274),
        (0.139801722472091, 0.867037963020972, 0.867196417173866),
        (0.132803582826135, 0.132803582826135, 0.864238656313373),
        (0.585237542559817, 0.867196417173866, 0.626073678553889),
        (0.854056756771391, 0.327022486610575, 0.132803582826135),
        (0.608033153305751, 0.609211757827930, 0.563400872894615),
        (0.594548715103631, 0.402154121844425, 0.397350264479728),
        (0.132803582826135, 0.607864817988203, 0.393931116786331),
        (0.867196417173866, 0.132803582826135, 0.579113634967759),
        (0.696624217558123, 0.867196417173866, 0.867196417173866),
        (0.376502829913114, 0.251726342618872, 0.377744842273078),
        (0.301205500593913, 0.132803582826135, 0.602988834086512),
        (0.132803582826135, 0.597239443993408, 0.659813872700797),
        (0.863976438248142, 0.132803582826135, 0.849345022283144),
        (0.613569638696747, 0.132803582826135, 0.392377571128275),
        (0.406360765071473, 0.132803582826135, 0.135146295636263),
        (0.867196417173866, 0.398017643591857, 0.863426931072750),
        (0.568907383791031, 0.867196417173866, 0.132803582826135),
        (0.867196417173866, 0.865179572782280, 0.142852487263221),
        (0.672140353954154, 0.132803582826135, 0.132803582826135),
        (0.132803582826135, 0.867196417173866, 0.336465223285276),
        (0.636573372562991, 0.627589547718886, 0.262943499800217),
        (0.132803582826135, 0.338192405082062, 0.601147033014945),
    )),
    52: (0.1320466666542, (
        (0.867953333345773, 0.614495856444306, 0.344242074969405),
        (0.354723971811558, 0.386623046117341, 0.391756146524187),
        (0.601686260792447, 0.625093116061506, 0.867953333345773),
        (0.508061290081391, 0.378152372842260, 0.867953333345773),
        (0.487947437676246, 0.132046666654227, 0.329547877554676),
        (0.395949015207841, 0.867953333345773, 0.607790604371412),
        (0.631894915494696, 0.752166778383300, 0.634184481880453),
        (0.132046666654227, 0.867953333345773, 0.597745844805568),
        (0.316853851930658, 0.393537204698959, 0.686436406186672),
        (0.727568986603954, 0.358502262158710, 0.647424040679824),
        (0.132046666654227, 0.339730389474398, 0.867953333345773),
        (0.132046666654227, 0.345606236239054, 0.139593014735927),
        (0.132046666654227, 0.315423051537416, 0.514710278214855),
        (0.448335213529624, 0.644680023308199, 0.132046666654227),
        (0.867953333345773, 0.361558563646424, 0.423675407391778),
        (0.867953333345773, 0.867953333345773, 0.659249063165673),
        (0.363259381896570, 0.646240900844958, 0.747532702338500),
        (0.132046666654227, 0.670127162895301, 0.132046666654227),
        (0.615646107511348, 0.389814817591669, 0.350681201869223),
        (0.132046666654227, 0.132046666654227, 0.704806966614164),
        (0.710778503487712, 0.609330367166822, 0.132046666654227),
        (0.607979592687760, 0.653304763742144, 0.371330543771756),
        (0.867953333345773, 0.396140150344652, 0.867953333345773),
        (0.604181746794421, 0.132046666654227, 0.590404586319335),
        (0.749233473841309, 0.132046666654227, 0.367953537385518),
        (0.403116143043571, 0.384461888125098, 0.132046666654227),
        (0.455432170447449, 0.867953333345773, 0.350483311546838),
        (0.783355265050749, 0.860507903022538, 0.400534477969035),
        (0.341710358742085, 0.650700405998862, 0.448564317642461),
        (0.867953333345773, 0.660036031703944, 0.857740006200770),
        (0.132046666654227, 0.867953333345773, 0.867953333345773),
        (0.867953333345773, 0.132046666654227, 0.867953333345773),
        (0.132046666654227, 0.603841823918759, 0.867953333345773),
        (0.344413051586456, 0.157128271610408, 0.549815729527518),
        (0.339736815068088, 0.132046666654227, 0.867953333345773),
        (0.867953333345773, 0.867953333345773, 0.132046666654227),
        (0.867953333345773, 0.396423453288074, 0.138770589270610),
        (0.705437362217540, 0.867953333345773, 0.867953333345773),
        (0.134177318675087, 0.600041389975041, 0.603877216046621),
        (0.627763955181779, 0.242032948279339, 0.132046666654227),
        (0.132046666654227, 0.522881290749250, 0.351289143999393),
        (0.307004325591760, 0.867953333345773, 0.132046666654227),
        (0.865445244584786, 0.579949934979452, 0.606078015945874),
        (0.867953333345773, 0.132046666654227, 0.603858144331731),
        (0.312675045879658, 0.136318268642891, 0.132046666654227),
        (0.526035094904706, 0.515987799808059, 0.581539100864800),
        (0.603859819063940, 0.132046666654227, 0.867953333345773),
        (0.441343839652635, 0.867953333345773, 0.867953333345773),
        (0.132046666654227, 0.132046666654227, 0.324661637896609),
        (0.136421454202688, 0.867953333345773, 0.333667652647550),
        (0.603859856511950, 0.867953333345773, 0.132046666654227),
        (0.867953333345773, 0.132046666654227, 0.132046666654227),
    )),
    53: (0.1306021419372, (
        (0.682056025442402, 0.130602141937303, 0.316424653823761),
        (0.484470785197686, 0.337032516269608, 0.665796581889815),
        (0.670671441947670, 0.327020715207578, 0.130602141937303),
        (0.500559597539660, 0.500554803983078, 0.869397858062697),
        (0.869397858062697, 0.130602141937303, 0.869397858062697),
        (0.130602141937303, 0.130602141937303, 0.869397858062697),
        (0.130602141937303, 0.869397858062697, 0.869397858062697),
        (0.315675094028371, 0.315609026843509, 0.182841338343193),
        (0.500692761394031, 0.869397858062697, 0.500692589501476),
        (0.676746707656529, 0.676264766392089, 0.134136380251111),
        (0.363779690021808, 0.645597630074519, 0.442166536610472),
        (0.869397858062697, 0.499081294935161, 0.130602141937303),
        (0.500117779335446, 0.869397858062697, 0.130602141937303),
        (0.501536342140053, 0.869397858062697, 0.869397858062697),
        (0.130602141937303, 0.498872926777282, 0.869397858062697),
        (0.130602141937303, 0.130602141937303, 0.151730227293084),
        (0.130602141937303, 0.494182915622106, 0.130602141937303),
        (0.496089000424249, 0.130602141937303, 0.130602141937303),
        (0.130602141937303, 0.157386901100739, 0.417785633662221),
        (0.495859980708749, 0.504632978008646, 0.218561277810590),
        (0.869397858062697, 0.869397858062697, 0.501276960082349),
        (0.315581987570682, 0.869397858062697, 0.315647873528998),
        (0.693274107070524, 0.511844387804673, 0.693304617935890),
        (0.615263968032326, 0.130602141937303, 0.571135438338684),
        (0.130602141937303, 0.592405803819579, 0.615814627543739),
        (0.310813827054634, 0.142110741320095, 0.635659011201713),
        (0.318593842210930, 0.679041278771441, 0.130602141937303),
        (0.486674574768811, 0.671695523512744, 0.671794518876072),
        (0.869397858062697, 0.684320580958750, 0.314924730547777),
        (0.315554096014055, 0.869397858062697, 0.684951517362652),
        (0.314823503847879, 0.684214839974916, 0.869397858062697),
        (0.130602141937303, 0.421564035119346, 0.383712761337123),
        (0.869397858062697, 0.130602141937303, 0.501559174826646),
        (0.684843694932804, 0.869397858062697, 0.315446505623767),
        (0.869397858062697, 0.130602141937303, 0.130602141937303),
        (0.637644418615165, 0.644651123471496, 0.443626960863820),
        (0.869397858062697, 0.500609413015493, 0.500608308162330),
        (0.869397858062697, 0.869397858062697, 0.869397858062697),
        (0.130602141937303, 0.864275934848540, 0.130602141937303),
        (0.499609689261793, 0.130602141937303, 0.842953685618879),
        (0.869397858062697, 0.316168880580556, 0.685568671812667),
        (0.316242577660448, 0.314941084634150, 0.869397858062697),
        (0.426120841554314, 0.130602141937303, 0.382813316557811),
        (0.648083364750291, 0.366318207386879, 0.458383209498071),
        (0.683634680042300, 0.314238473657986, 0.869397858062697),
        (0.869397858062697, 0.600740129170146, 0.865308795176552),
        (0.685324293729760, 0.841634102284262, 0.685236595979907),
        (0.869397858062697, 0.314936062547984, 0.316134395291960),
        (0.130602141937303, 0.869397858062697, 0.500325514277139),
        (0.130602141937303, 0.332936381535469, 0.662515655637997),
        (0.869397858062697, 0.869397858062697, 0.130602141937303),
        (0.386149497820482, 0.385249415225197, 0.427993532920477),
        (0.131685813235995, 0.677153865606259, 0.319572573146395),
    )),
    54: (0.1306019447727, (
        (0.130601944772777, 0.676977988621128, 0.241490004806261),
        (0.130601944772777, 0.869398055227223, 0.455977775225471),
        (0.312820746342090, 0.321827985079393, 0.497553283066003),
        (0.869398055227223, 0.500376279069352, 0.869398055227223),
        (0.869398055227223, 0.130601944772777, 0.500143607057753),
        (0.292351892562695, 0.710114330398924, 0.869398055227223),
        (0.869398055227223, 0.869398055227223, 0.130601944772777),
        (0.869398055227223, 0.315378001648787, 0.315249866448189),
        (0.354894836788868, 0.540502082109370, 0.326992162256770),
        (0.681696161029880, 0.318445500029062, 0.869398055227223),
        (0.315328847248085, 0.316528223465858, 0.869398055227223),
        (0.497378935601173, 0.330154531087435, 0.682545845627612),
        (0.625543046021020, 0.543290795021171, 0.384580215807111),
        (0.484353835028865, 0.515707681142279, 0.869398055227223),
        (0.869398055227223, 0.316024492286882, 0.684277677414884),
        (0.454347481068799, 0.679084088080910, 0.527887098299559),
        (0.368972735059180, 0.869398055227223, 0.345002087524693),
        (0.499693084268957, 0.321735628317822, 0.315031869625607),
        (0.684627224085273, 0.130601944772777, 0.684770831141415),
        (0.130601944772777, 0.504934465615993, 0.869398055227223),
        (0.367072171905330, 0.715982625874551, 0.130601944772777),
        (0.869398055227223, 0.685502522872081, 0.683890410141505),
        (0.684274140256155, 0.316266183863231, 0.499898986530461),
        (0.869398055227223, 0.869398055227223, 0.869398055227223),
        (0.500000000001074, 0.130601944772777, 0.500000000000000),
        (0.130601944772777, 0.535316378975694, 0.465429361036417),
        (0.500143607057753, 0.130601944772777, 0.130601944772777),
        (0.869398055227223, 0.502988545323035, 0.130601944772777),
        (0.130601944772777, 0.707650670157040, 0.664231035826594),
        (0.130601944772777, 0.130601944772777, 0.499856392943321),
        (0.664895343841816, 0.866739633337138, 0.662370548387852),
        (0.835077077618640, 0.686193584326125, 0.313748866050446),
        (0.869398055227223, 0.130601944772777, 0.130601944772777),
        (0.499450861483138, 0.869398055227223, 0.869398055227223),
        (0.130601944772777, 0.320111529160659, 0.684725782017063),
        (0.869398055227223, 0.130601944772777, 0.869398055227223),
        (0.308765759588996, 0.514706893037202, 0.674219188850358),
        (0.684770831142488, 0.130601944772777, 0.315372775915801),
        (0.869398055227223, 0.502540167942629, 0.497461610359226),
        (0.684648295825083, 0.317502574032680, 0.130601944772777),
        (0.652403139335556, 0.540007989173833, 0.646391283238909),
        (0.130601944772777, 0.324180165846815, 0.308928589212422),
        (0.582120272871407, 0.869398055227223, 0.130601944772777),
        (0.628702926942696, 0.869398055227223, 0.390177649128337),
        (0.315229168857512, 0.130601944772777, 0.684627224084198),
        (0.315372775915802, 0.130601944772777, 0.315229168857512),
        (0.318945834579895, 0.368392274767788, 0.130601944772777),
        (0.683895971586257, 0.684349769774384, 0.869398055227223),
        (0.130601944772777, 0.130601944772777, 0.869398055227223),
        (0.607845834039541, 0.606807256224359, 0.130601944772777),
        (0.336308199138244, 0.869398055227223, 0.663461001461695),
        (0.130601944772777, 0.130601944772777, 0.130601944772777),
        (0.869398055227223, 0.869398055227223, 0.497825641440340),
        (0.499856392943320, 0.130601944772777, 0.869398055227223),
    )),
    55: (0.1306019374818, (
        (0.869398062518150, 0.869398062518150, 0.869398062518150),
        (0.130601937481850, 0.869398062518150, 0.869398062518150),
        (0.869398062518150, 0.130601937481850, 0.869398062518150),
        (0.130601937481850, 0.130601937481850, 0.869398062518150),
        (0.869398062518150, 0.869398062518150, 0.130601937481850),
        (0.130601937481850, 0.869398062518150, 0.130601937481850),
        (0.869398062518150, 0.130601937481850, 0.130601937481850),
        (0.130601937481850, 0.130601937481850, 0.130601937481850),
        (0.499999999999958, 0.869398062518150, 0.869398062518150),
        (0.869398062518150, 0.499999999999982, 0.869398062518150),
        (0.869398062518150, 0.869398062518150, 0.500000000000166),
        (0.130601937481850, 0.500000000000018, 0.869398062518150),
        (0.130601937481850, 0.869398062518150, 0.500000000000083),
        (0.499999999999885, 0.130601937481850, 0.869398062518150),
        (0.499999999999802, 0.869398062518150, 0.130601937481850),
        (0.869398062518150, 0.130601937481850, 0.500000000000113),
        (0.869398062518150, 0.500000000000294, 0.130601937481850),
        (0.130601937481850, 0.130601937481850, 0.499999999999974),
        (0.130601937481850, 0.499999999999922, 0.130601937481850),
        (0.499999999999966, 0.130601937481850, 0.130601937481850),
        (0.684699031259034, 0.684699031259063, 0.869398062518150),
        (0.684699031259020, 0.869398062518150, 0.684699031259128),
        (0.315300968740910, 0.684699031259079, 0.869398062518150),
        (0.869398062518150, 0.684699031259054, 0.684699031259152),
        (0.315300968740906, 0.869398062518150, 0.684699031259116),
        (0.684699031258929, 0.315300968740902, 0.869398062518150),
        (0.130601937481850, 0.684699031259078, 0.684699031259116),
        (0.315300968740871, 0.315300968740937, 0.869398062518150),
        (0.869398062518150, 0.315300968740923, 0.684699031259129),
        (0.684699031258967, 0.869398062518150, 0.315300968740988),
        (0.869398062518150, 0.684699031259212, 0.315300968741023),
        (0.315300968740826, 0.869398062518150, 0.315300968740969),
        (0.684699031258946, 0.130601937481850, 0.684699031259108),
        (0.130601937481850, 0.315300968740922, 0.684699031259077),
        (0.315300968740867, 0.130601937481850, 0.684699031259075),
        (0.130601937481850, 0.684699031259000, 0.315300968740965),
        (0.684699031258921, 0.684699031259177, 0.130601937481850),
        (0.869398062518150, 0.315300968740830, 0.315300968741000),
        (0.315300968740826, 0.684699031259037, 0.130601937481850),
        (0.684699031259006, 0.130601937481850, 0.315300968740904),
        (0.130601937481850, 0.315300968740894, 0.315300968740916),
        (0.684699031259054, 0.315300968740892, 0.130601937481850),
        (0.315300968740896, 0.130601937481850, 0.315300968740904),
        (0.315300968740906, 0.315300968740886, 0.130601937481850),
        (0.499999999999965, 0.500000000000038, 0.869398062518150),
        (0.499999999999891, 0.869398062518150, 0.500000000000006),
        (0.869398062518150, 0.499999999999907, 0.500000000000018),
        (0.130601937481850, 0.499999999999922, 0.499999999999983),
        (0.499999999999890, 0.130601937481850, 0.500000000000004),
        (0.499999999999884, 0.500000000000001, 0.130601937481850),
        (0.499999999999953, 0.684699031259096, 0.684699031259097),
        (0.684699031259052, 0.499999999999982, 0.684699031259136),
        (0.684699031259087, 0.684699031259063, 0.500000000000120),
        (0.315300968740887, 0.499999999999979, 0.684699031259093),
        (0.315300968740871, 0.684699031259020, 0.500000000000038),
    )),
    56: (0.1306019374818, (
        (0.869398062518150, 0.869398062518150, 0.869398062518150),
        (0.130601937481850, 0.869398062518150, 0.869398062518150),
        (0.869398062518150, 0.130601937481850, 0.869398062518150),
        (0.130601937481850, 0.130601937481850, 0.869398062518150),
        (0.869398062518150, 0.869398062518150, 0.130601937481850),
        (0.130601937481850, 0.869398062518150, 0.130601937481850),
        (0.869398062518150, 0.130601937481850, 0.130601937481850),
        (0.130601937481850, 0.130601937481850, 0.130601937481850),
        (0.499999999999958, 0.869398062518150, 0.869398062518150),
        (0.869398062518150, 0.499999999999982, 0.869398062518150),
        (0.869398062518150, 0.869398062518150, 0.500000000000166),
        (0.130601937481850, 0.500000000000018, 0.869398062518150),
        (0.130601937481850, 0.869398062518150, 0.500000000000083),
        (0.499999999999885, 0.130601937481850, 0.869398062518150),
        (0.499999999999802, 0.869398062518150, 0.130601937481850),
        (0.869398062518150, 0.130601937481850, 0.500000000000113),
        (0.869398062518150, 0.500000000000294, 0.130601937481850),
        (0.130601937481850, 0.130601937481850, 0.499999999999974),
        (0.130601937481850, 0.499999999999922, 0.130601937481850),
        (0.499999999999966, 0.130601937481850, 0.130601937481850),
        (0.684699031259034, 0.684699031259063, 0.869398062518150),
        (0.684699031259020, 0.869398062518150, 0.684699031259128),
        (0.315300968740910, 0.684699031259079, 0.869398062518150),
        (0.869398062518150, 0.684699031259054, 0.684699031259152),
        (0.315300968740906, 0.869398062518150, 0.684699031259116),
        (0.684699031258929, 0.315300968740902, 0.869398062518150),
        (0.130601937481850, 0.684699031259078, 0.684699031259116),
        (0.315300968740871, 0.315300968740937, 0.869398062518150),
        (0.869398062518150, 0.315300968740923, 0.684699031259129),
        (0.684699031258967, 0.869398062518150, 0.315300968740988),
        (0.869398062518150, 0.684699031259212, 0.315300968741023),
        (0.315300968740826, 0.869398062518150, 0.315300968740969),
        (0.684699031258946, 0.130601937481850, 0.684699031259108),
        (0.130601937481850, 0.315300968740922, 0.684699031259077),
        (0.315300968740867, 0.130601937481850, 0.684699031259075),
        (0.130601937481850, 0.684699031259000, 0.315300968740965),
        (0.684699031258921, 0.684699031259177, 0.130601937481850),
        (0.869398062518150, 0.315300968740830, 0.315300968741000),
        (0.315300968740826, 0.684699031259037, 0.130601937481850),
        (0.684699031259006, 0.130601937481850, 0.315300968740904),
        (0.130601937481850, 0.315300968740894, 0.315300968740916),
        (0.684699031259054, 0.315300968740892, 0.130601937481850),
        (0.315300968740896, 0.130601937481850, 0.315300968740904),
        (0.315300968740906, 0.315300968740886, 0.130601937481850),
        (0.499999999999965, 0.500000000000038, 0.869398062518150),
        (0.499999999999891, 0.869398062518150, 0.500000000000006),
        (0.869398062518150, 0.499999999999907, 0.500000000000018),
        (0.130601937481850, 0.499999999999922, 0.499999999999983),
        (0.499999999999890, 0.130601937481850, 0.500000000000004),
        (0.499999999999884, 0.500000000000001, 0.130601937481850),
        (0.499999999999953, 0.684699031259096, 0.684699031259097),
        (0.684699031259052, 0.499999999999982, 0.684699031259136),
        (0.684699031259087, 0.684699031259063, 0.500000000000120),
        (0.315300968740887, 0.499999999999979, 0.684699031259093),
        (0.315300968740871, 0.684699031259020, 0.500000000000038),
        (0.499999999999906, 0.315300968740904, 0.684699031259079),
    )),
    57: (0.1306019374818, (
        (0.869398062518150, 0.869398062518150, 0.869398062518150),
        (0.130601937481850, 0.869398062518150, 0.869398062518150),
        (0.869398062518150, 0.130601937481850, 0.869398062518150),
        (0.130601937481850, 0.130601937481850, 0.869398062518150),
        (0.869398062518150, 0.869398062518150, 0.130601937481850),
        (0.130601937481850, 0.869398062518150, 0.130601937481850),
        (0.869398062518150, 0.130601937481850, 0.130601937481850),
        (0.130601937481850, 0.130601937481850, 0.130601937481850),
        (0.499999999999958, 0.869398062518150, 0.869398062518150),
        (0.869398062518150, 0.499999999999982, 0.869398062518150),
        (0.869398062518150, 0.869398062518150, 0.500000000000166),
        (0.130601937481850, 0.500000000000018, 0.869398062518150),
        (0.130601937481850, 0.869398062518150, 0.500000000000083),
        (0.499999999999885, 0.130601937481850, 0.869398062518150),
        (0.499999999999802, 0.869398062518150, 0.130601937481850),
        (0.869398062518150, 0.130601937481850, 0.500000000000113),
        (0.869398062518150, 0.500000000000294, 0.130601937481850),
        (0.130601937481850, 0.130601937481850, 0.499999999999974),
        (0.130601937481850, 0.499999999999922, 0.130601937481850),
        (0.499999999999966, 0.130601937481850, 0.130601937481850),
        (0.684699031259034, 0.684699031259063, 0.869398062518150),
        (0.684699031259020, 0.869398062518150, 0.684699031259128),
        (0.315300968740910, 0.684699031259079, 0.869398062518150),
        (0.869398062518150, 0.684699031259054, 0.684699031259152),
        (0.315300968740906, 0.869398062518150, 0.684699031259116),
        (0.684699031258929, 0.315300968740902, 0.869398062518150),
        (0.130601937481850, 0.684699031259078, 0.684699031259116),
        (0.315300968740871, 0.315300968740937, 0.869398062518150),
        (0.869398062518150, 0.315300968740923, 0.684699031259129),
        (0.684699031258967, 0.869398062518150, 0.315300968740988),
        (0.869398062518150, 0.684699031259212, 0.315300968741023),
        (0.315300968740826, 0.869398062518150, 0.315300968740969),
        (0.684699031258946, 0.130601937481850, 0.684699031259108),
        (0.130601937481850, 0.315300968740922, 0.684699031259077),
        (0.315300968740867, 0.130601937481850, 0.684699031259075),
        (0.130601937481850, 0.684699031259000, 0.315300968740965),
        (0.684699031258921, 0.684699031259177, 0.130601937481850),
        (0.869398062518150, 0.315300968740830, 0.315300968741000),
        (0.315300968740826, 0.684699031259037, 0.130601937481850),
        (0.684699031259006, 0.130601937481850, 0.315300968740904),
        (0.130601937481850, 0.315300968740894, 0.315300968740916),
        (0.684699031259054, 0.315300968740892, 0.130601937481850),
        (0.315300968740896, 0.130601937481850, 0.315300968740904),
        (0.315300968740906, 0.315300968740886, 0.130601937481850),
        (0.499999999999965, 0.500000000000038, 0.869398062518150),
        (0.499999999999891, 0.869398062518150, 0.500000000000006),
        (0.869398062518150, 0.499999999999907, 0.500000000000018),
        (0.130601937481850, 0.499999999999922, 0.499999999999983),
        (0.499999999999890, 0.130601937481850, 0.500000000000004),
        (0.499999999999884, 0.500000000000001, 0.130601937481850),
        (0.499999999999953, 0.684699031259096, 0.684699031259097),
        (0.684699031259052, 0.499999999999982, 0.684699031259136),
        (0.684699031259087, 0.684699031259063, 0.500000000000120),
        (0.315300968740887, 0.499999999999979, 0.684699031259093),
        (0.315300968740871, 0.684699031259020, 0.500000000000038),
        (0.499999999999906, 0.315300968740904, 0.684699031259079),
        (0.499999999999849, 0.684699031259059, 0.315300968740921),
    )),
    58: (0.1306019374818, (
        (0.869398062518150, 0.869398062518150, 0.869398062518150),
        (0.130601937481850, 0.869398062518150, 0.869398062518150),
        (0.869398062518150, 0.130601937481850, 0.869398062518150),
        (0.130601937481850, 0.130601937481850, 0.869398062518150),
        (0.869398062518150, 0.869398062518150, 0.130601937481850),
        (0.130601937481850, 0.869398062518150, 0.130601937481850),
        (0.869398062518150, 0.130601937481850, 0.130601937481850),
        (0.130601937481850, 0.130601937481850, 0.130601937481850),
        (0.499999999999958, 0.869398062518150, 0.869398062518150),
        (0.869398062518150, 0.499999999999982, 0.869398062518150),
        (0.869398062518150, 0.869398062518150, 0.500000000000166),
        (0.130601937481850, 0.500000000000018, 0.869398062518150),
        (0.130601937481850, 0.869398062518150, 0.500000000000083),
        (0.499999999999885, 0.130601937481850, 0.869398062518150),
        (0.499999999999802, 0.869398062518150, 0.130601937481850),
        (0.869398062518150, 0.130601937481850, 0.500000000000113),
        (0.869398062518150, 0.500000000000294, 0.130601937481850),
        (0.130601937481850, 0.130601937481850, 0.499999999999974),
        (0.130601937481850, 0.499999999999922, 0.130601937481850),
        (0.499999999999966, 0.130601937481850, 0.130601937481850),
        (0.684699031259034, 0.684699031259063, 0.869398062518150),
        (0.684699031259020, 0.869398062518150, 0.684699031259128),
        (0.315300968740910, 0.684699031259079, 0.869398062518150),
        (0.869398062518150, 0.684699031259054, 0.684699031259152),
        (0.315300968740906, 0.869398062518150, 0.684699031259116),
        (0.684699031258929, 0.315300968740902, 0.869398062518150),
        (0.130601937481850, 0.684699031259078, 0.684699031259116),
        (0.315300968740871, 0.315300968740937, 0.869398062518150),
        (0.869398062518150, 0.315300968740923, 0.684699031259129),
        (0.684699031258967, 0.869398062518150, 0.315300968740988),
        (0.869398062518150, 0.684699031259212, 0.315300968741023),
        (0.315300968740826, 0.869398062518150, 0.315300968740969),
        (0.684699031258946, 0.130601937481850, 0.684699031259108),
        (0.130601937481850, 0.315300968740922, 0.684699031259077),
        (0.315300968740867, 0.130601937481850, 0.684699031259075),
        (0.130601937481850, 0.684699031259000, 0.315300968740965),
        (0.684699031258921, 0.684699031259177, 0.130601937481850),
        (0.869398062518150, 0.315300968740830, 0.315300968741000),
        (0.315300968740826, 0.684699031259037, 0.130601937481850),
        (0.684699031259006, 0.130601937481850, 0.315300968740904),
        (0.130601937481850, 0.315300968740894, 0.315300968740916),
        (0.684699031259054, 0.315300968740892, 0.130601937481850),
        (0.315300968740896, 0.130601937481850, 0.315300968740904),
        (0.315300968740906, 0.315300968740886, 0.130601937481850),
        (0.499999999999965, 0.500000000000038, 0.869398062518150),
        (0.499999999999891, 0.869398062518150, 0.500000000000006),
        (0.869398062518150, 0.499999999999907, 0.500000000000018),
        (0.130601937481850, 0.499999999999922, 0.499999999999983),
        (0.499999999999890, 0.130601937481850, 0.500000000000004),
        (0.499999999999884, 0.500000000000001, 0.130601937481850),
        (0.499999999999953, 0.684699031259096, 0.684699031259097),
        (0.684699031259052, 0.499999999999982, 0.684699031259136),
        (0.684699031259087, 0.684699031259063, 0.500000000000120),
        (0.315300968740887, 0.499999999999979, 0.684699031259093),
        (0.315300968740871, 0.684699031259020, 0.500000000000038),
        (0.499999999999906, 0.315300968740904, 0.684699031259079),
        (0.499999999999849, 0.684699031259059, 0.315300968740921),
        (0.684699031258828, 0.315300968741005, 0.499999999999907),
    )),
    59: (0.1306019374818, (
        (0.869398062518150, 0.869398062518150, 0.869398062518150),
        (0.130601937481850, 0.869398062518150, 0.869398062518150),
        (0.869398062518150, 0.130601937481850, 0.869398062518150),
        (0.130601937481850, 0.130601937481850, 0.869398062518150),
        (0.869398062518150, 0.869398062518150, 0.130601937481850),
        (0.130601937481850, 0.869398062518150, 0.130601937481850),
        (0.869398062518150, 0.130601937481850, 0.130601937481850),
        (0.130601937481850, 0.130601937481850, 0.130601937481850),
        (0.499999999999958, 0.869398062518150, 0.869398062518150),
        (0.869398062518150, 0.499999999999982, 0.869398062518150),
        (0.869398062518150, 0.869398062518150, 0.500000000000166),
        (0.130601937481850, 0.500000000000018, 0.869398062518150),
        (0.130601937481850, 0.869398062518150, 0.500000000000083),
        (0.499999999999885, 0.130601937481850, 0.869398062518150),
        (0.499999999999802, 0.869398062518150, 0.130601937481850),
        (0.869398062518150, 0.130601937481850, 0.500000000000113),
        (0.869398062518150, 0.500000000000294, 0.130601937481850),
        (0.130601937481850, 0.130601937481850, 0.499999999999974),
        (0.130601937481850, 0.499999999999922, 0.130601937481850),
        (0.499999999999966, 0.130601937481850, 0.130601937481850),
        (0.684699031259034, 0.684699031259063, 0.869398062518150),
        (0.684699031259020, 0.869398062518150, 0.684699031259128),
        (0.315300968740910, 0.684699031259079, 0.869398062518150),
        (0.869398062518150, 0.684699031259054, 0.684699031259152),
        (0.315300968740906, 0.869398062518150, 0.684699031259116),
        (0.684699031258929, 0.315300968740902, 0.869398062518150),
        (0.130601937481850, 0.684699031259078, 0.684699031259116),
        (0.315300968740871, 0.315300968740937, 0.869398062518150),
        (0.869398062518150, 0.315300968740923, 0.684699031259129),
        (0.684699031258967, 0.869398062518150, 0.315300968740988),
        (0.869398062518150, 0.684699031259212, 0.315300968741023),
        (0.315300968740826, 0.869398062518150, 0.315300968740969),
        (0.684699031258946, 0.130601937481850, 0.684699031259108),
        (0.130601937481850, 0.315300968740922, 0.684699031259077),
        (0.315300968740867, 0.130601937481850, 0.684699031259075),
        (0.130601937481850, 0.684699031259000, 0.315300968740965),
        (0.684699031258921, 0.684699031259177, 0.130601937481850),
        (0.869398062518150, 0.315300968740830, 0.315300968741000),
        (0.315300968740826, 0.684699031259037, 0.130601937481850),
        (0.684699031259006, 0.130601937481850, 0.315300968740904),
        (0.130601937481850, 0.315300968740894, 0.315300968740916),
        (0.684699031259054, 0.315300968740892, 0.130601937481850),
        (0.315300968740896, 0.130601937481850, 0.315300968740904),
        (0.315300968740906, 0.315300968740886, 0.130601937481850),
        (0.499999999999965, 0.500000000000038, 0.869398062518150),
        (0.499999999999891, 0.869398062518150, 0.500000000000006),
        (0.869398062518150, 0.499999999999907, 0.500000000000018),
        (0.130601937481850, 0.499999999999922, 0.499999999999983),
        (0.499999999999890, 0.130601937481850, 0.500000000000004),
        (0.499999999999884, 0.500000000000001, 0.130601937481850),
        (0.499999999999953, 0.684699031259096, 0.684699031259097),
        (0.684699031259052, 0.499999999999982, 0.684699031259136),
        (0.684699031259087, 0.684699031259063, 0.500000000000120),
        (0.315300968740887, 0.499999999999979, 0.684699031259093),
        (0.315300968740871, 0.684699031259020, 0.500000000000038),
        (0.499999999999906, 0.315300968740904, 0.684699031259079),
        (0.499999999999849, 0.684699031259059, 0.315300968740921),
        (0.684699031258828, 0.315300968741005, 0.499999999999907),
        (0.684699031258952, 0.500000000000068, 0.315300968740874),
    )),
    60: (0.1306019374818, (
        (0.869398062518150, 0.869398062518150, 0.869398062518150),
        (0.130601937481850, 0.869398062518150, 0.869398062518150),
        (0.869398062518150, 0.130601937481850, 0.869398062518150),
        (0.130601937481850, 0.130601937481850, 0.869398062518150),
        (0.869398062518150, 0.869398062518150, 0.130601937481850),
        (0.130601937481850, 0.869398062518150, 0.130601937481850),
        (0.869398062518150, 0.130601937481850, 0.130601937481850),
        (0.130601937481850, 0.130601937481850, 0.130601937481850),
        (0.499999999999958, 0.869398062518150, 0.869398062518150),
        (0.869398062518150, 0.499999999999982, 0.869398062518150),
        (0.869398062518150, 0.869398062518150, 0.500000000000166),
        (0.130601937481850, 0.500000000000018, 0.869398062518150),
        (0.130601937481850, 0.869398062518150, 0.500000000000083),
        (0.499999999999885, 0.130601937481850, 0.869398062518150),
        (0.499999999999802, 0.869398062518150, 0.130601937481850),
        (0.869398062518150, 0.130601937481850, 0.500000000000113),
        (0.869398062518150, 0.500000000000294, 0.130601937481850),
        (0.130601937481850, 0.130601937481850, 0.499999999999974),
        (0.130601937481850, 0.499999999999922, 0.130601937481850),
        (0.499999999999966, 0.130601937481850, 0.130601937481850),
        (0.684699031259034, 0.684699031259063, 0.869398062518150),
        (0.684699031259020, 0.869398062518150, 0.684699031259128),
        (0.315300968740910, 0.684699031259079, 0.869398062518150),
        (0.869398062518150, 0.684699031259054, 0.684699031259152),
        (0.315300968740906, 0.869398062518150, 0.684699031259116),
        (0.684699031258929, 0.315300968740902, 0.869398062518150),
        (0.130601937481850, 0.684699031259078, 0.684699031259116),
        (0.315300968740871, 0.315300968740937, 0.869398062518150),
        (0.869398062518150, 0.315300968740923, 0.684699031259129),
        (0.684699031258967, 0.869398062518150, 0.315300968740988),
        (0.869398062518150, 0.684699031259212, 0.315300968741023),
        (0.315300968740826, 0.869398062518150, 0.315300968740969),
        (0.684699031258946, 0.130601937481850, 0.684699031259108),
        (0.130601937481850, 0.315300968740922, 0.684699031259077),
        (0.315300968740867, 0.130601937481850, 0.684699031259075),
        (0.130601937481850, 0.684699031259000, 0.315300968740965),
        (0.684699031258921, 0.684699031259177, 0.130601937481850),
        (0.869398062518150, 0.315300968740830, 0.315300968741000),
        (0.315300968740826, 0.684699031259037, 0.130601937481850),
        (0.684699031259006, 0.130601937481850, 0.315300968740904),
        (0.130601937481850, 0.315300968740894, 0.315300968740916),
        (0.684699031259054, 0.315300968740892, 0.130601937481850),
        (0.315300968740896, 0.130601937481850, 0.315300968740904),
        (0.315300968740906, 0.315300968740886, 0.130601937481850),
        (0.499999999999965, 0.500000000000038, 0.869398062518150),
        (0.499999999999891, 0.869398062518150, 0.500000000000006),
        (0.869398062518150, 0.499999999999907, 0.500000000000018),
        (0.130601937481850, 0.499999999999922, 0.499999999999983),
        (0.499999999999890, 0.130601937481850, 0.500000000000004),
        (0.499999999999884, 0.500000000000001, 0.130601937481850),
        (0.499999999999953, 0.684699031259096, 0.684699031259097),
        (0.684699031259052, 0.499999999999982, 0.684699031259136),
        (0.684699031259087, 0.684699031259063, 0.500000000000120),
        (0.315300968740887, 0.499999999999979, 0.684699031259093),
        (0.315300968740871, 0.684699031259020, 0.500000000000038),
        (0.499999999999906, 0.315300968740904, 0.684699031259079),
        (0.499999999999849, 0.684699031259059, 0.315300968740921),
        (0.684699031258828, 0.315300968741005, 0.499999999999907),
        (0.684699031258952, 0.500000000000068, 0.315300968740874),
        (0.406212103880026, 0.406212103880111, 0.406211494123979),
    )),
    61: (0.1306019374817, (
        (0.869398062518221, 0.869398062518221, 0.869398062518221),
        (0.130601937481779, 0.869398062518221, 0.869398062518221),
        (0.869398062518221, 0.130601937481779, 0.869398062518221),
        (0.130601937481779, 0.130601937481779, 0.869398062518221),
        (0.869398062518221, 0.869398062518221, 0.130601937481779),
        (0.130601937481779, 0.869398062518221, 0.130601937481779),
        (0.869398062518221, 0.130601937481779, 0.130601937481779),
        (0.130601937481779, 0.130601937481779, 0.130601937481779),
        (0.500000000000100, 0.869398062518221, 0.869398062518221),
        (0.869398062518221, 0.500000000000089, 0.869398062518221),
        (0.869398062518221, 0.869398062518221, 0.500000000000097),
        (0.130601937481779, 0.500000000000090, 0.869398062518221),
        (0.130601937481779, 0.869398062518221, 0.500000000000097),
        (0.500000000000046, 0.130601937481779, 0.869398062518221),
        (0.500000000000049, 0.869398062518221, 0.130601937481779),
        (0.869398062518221, 0.130601937481779, 0.500000000000080),
        (0.869398062518221, 0.500000000000097, 0.130601937481779),
        (0.130601937481779, 0.130601937481779, 0.500000000000072),
        (0.130601937481779, 0.500000000000094, 0.130601937481779),
        (0.500000000000106, 0.130601937481779, 0.130601937481779),
        (0.684699031259210, 0.684699031259267, 0.869398062518221),
        (0.684699031259188, 0.869398062518221, 0.684699031259276),
        (0.315300968740813, 0.684699031259263, 0.869398062518221),
        (0.869398062518221, 0.684699031259205, 0.684699031259253),
        (0.315300968740828, 0.869398062518221, 0.684699031259266),
        (0.684699031259243, 0.315300968740796, 0.869398062518221),
        (0.130601937481779, 0.684699031259207, 0.684699031259253),
        (0.315300968740750, 0.315300968740803, 0.869398062518221),
        (0.869398062518221, 0.315300968740833, 0.684699031259266),
        (0.684699031259242, 0.869398062518221, 0.315300968740816),
        (0.869398062518221, 0.684699031259272, 0.315300968740829),
        (0.315300968740754, 0.869398062518221, 0.315300968740820),
        (0.684699031259215, 0.130601937481779, 0.684699031259252),
        (0.130601937481779, 0.315300968740829, 0.684699031259266),
        (0.315300968740799, 0.130601937481779, 0.684699031259234),
        (0.130601937481779, 0.684699031259277, 0.315300968740821),
        (0.684699031259215, 0.684699031259250, 0.130601937481779),
        (0.869398062518221, 0.315300968740762, 0.315300968740823),
        (0.315300968740799, 0.684699031259237, 0.130601937481779),
        (0.684699031259266, 0.130601937481779, 0.315300968740817),
        (0.130601937481779, 0.315300968740758, 0.315300968740816),
        (0.684699031259253, 0.315300968740796, 0.130601937481779),
        (0.315300968740757, 0.130601937481779, 0.315300968740824),
        (0.315300968740765, 0.315300968740805, 0.130601937481779),
        (0.500000000000015, 0.500000000000106, 0.869398062518221),
        (0.500000000000013, 0.869398062518221, 0.500000000000055),
        (0.869398062518221, 0.499999999999984, 0.500000000000058),
        (0.130601937481779, 0.499999999999979, 0.500000000000052),
        (0.500000000000036, 0.130601937481779, 0.500000000000066),
        (0.500000000000032, 0.500000000000092, 0.130601937481779),
        (0.500000000000064, 0.684699031259303, 0.684699031259269),
        (0.684699031259275, 0.500000000000092, 0.684699031259249),
        (0.684699031259238, 0.684699031259217, 0.500000000000150),
        (0.315300968740713, 0.500000000000097, 0.684699031259254),
        (0.315300968740743, 0.684699031259216, 0.500000000000140),
        (0.499999999999991, 0.315300968740744, 0.684699031259254),
        (0.499999999999992, 0.684699031259222, 0.315300968740771),
        (0.684699031259216, 0.315300968740745, 0.500000000000114),
        (0.684699031259190, 0.500000000000062, 0.315300968740764),
        (0.315300968740771, 0.315300968740751, 0.500000000000114),
        (0.315300968740792, 0.500000000000075, 0.315300968740766),
    )),
    62: (0.1306019374817, (
        (0.869398062518221, 0.869398062518221, 0.869398062518221),
        (0.130601937481779, 0.869398062518221, 0.869398062518221),
        (0.869398062518221, 0.130601937481779, 0.869398062518221),
        (0.130601937481779, 0.130601937481779, 0.869398062518221),
        (0.869398062518221, 0.869398062518221, 0.130601937481779),
        (0.130601937481779, 0.869398062518221, 0.130601937481779),
        (0.869398062518221, 0.130601937481779, 0.130601937481779),
        (0.130601937481779, 0.130601937481779, 0.130601937481779),
        (0.500000000000100, 0.869398062518221, 0.869398062518221),
        (0.869398062518221, 0.500000000000089, 0.869398062518221),
        (0.869398062518221, 0.869398062518221, 0.500000000000097),
        (0.130601937481779, 0.500000000000090, 0.869398062518221),
        (0.130601937481779, 0.869398062518221, 0.500000000000097),
        (0.500000000000046, 0.130601937481779, 0.869398062518221),
        (0.500000000000049, 0.869398062518221, 0.130601937481779),
        (0.869398062518221, 0.130601937481779, 0.500000000000080),
        (0.869398062518221, 0.500000000000097, 0.130601937481779),
        (0.130601937481779, 0.130601937481779, 0.500000000000072),
        (0.130601937481779, 0.500000000000094, 0.130601937481779),
        (0.500000000000106, 0.130601937481779, 0.130601937481779),
        (0.684699031259210, 0.684699031259267, 0.869398062518221),
        (0.684699031259188, 0.869398062518221, 0.684699031259276),
        (0.315300968740813, 0.684699031259263, 0.869398062518221),
        (0.869398062518221, 0.684699031259205, 0.684699031259253),
        (0.315300968740828, 0.869398062518221, 0.684699031259266),
        (0.684699031259243, 0.315300968740796, 0.869398062518221),
        (0.130601937481779, 0.684699031259207, 0.684699031259253),
        (0.315300968740750, 0.315300968740803, 0.869398062518221),
        (0.869398062518221, 0.315300968740833, 0.684699031259266),
        (0.684699031259242, 0.869398062518221, 0.315300968740816),
        (0.869398062518221, 0.684699031259272, 0.315300968740829),
        (0.315300968740754, 0.869398062518221, 0.315300968740820),
        (0.684699031259215, 0.130601937481779, 0.684699031259252),
        (0.130601937481779, 0.315300968740829, 0.684699031259266),
        (0.315300968740799, 0.130601937481779, 0.684699031259234),
        (0.130601937481779, 0.684699031259277, 0.315300968740821),
        (0.684699031259215, 0.684699031259250, 0.130601937481779),
        (0.869398062518221, 0.315300968740762, 0.315300968740823),
        (0.315300968740799, 0.684699031259237, 0.130601937481779),
        (0.684699031259266, 0.130601937481779, 0.315300968740817),
        (0.130601937481779, 0.315300968740758, 0.315300968740816),
        (0.684699031259253, 0.315300968740796, 0.130601937481779),
        (0.315300968740757, 0.130601937481779, 0.315300968740824),
        (0.315300968740765, 0.315300968740805, 0.130601937481779),
        (0.500000000000015, 0.500000000000106, 0.869398062518221),
        (0.500000000000013, 0.869398062518221, 0.500000000000055),
        (0.869398062518221, 0.499999999999984, 0.500000000000058),
        (0.130601937481779, 0.499999999999979, 0.500000000000052),
        (0.500000000000036, 0.130601937481779, 0.500000000000066),
        (0.500000000000032, 0.500000000000092, 0.130601937481779),
        (0.500000000000064, 0.684699031259303, 0.684699031259269),
        (0.684699031259275, 0.500000000000092, 0.684699031259249),
        (0.684699031259238, 0.684699031259217, 0.500000000000150),
        (0.315300968740713, 0.500000000000097, 0.684699031259254),
        (0.315300968740743, 0.684699031259216, 0.500000000000140),
        (0.499999999999991, 0.315300968740744, 0.684699031259254),
        (0.499999999999992, 0.684699031259222, 0.315300968740771),
        (0.684699031259216, 0.315300968740745, 0.500000000000114),
        (0.684699031259190, 0.500000000000062, 0.315300968740764),
        (0.315300968740771, 0.315300968740751, 0.500000000000114),
        (0.315300968740792, 0.500000000000075, 0.315300968740766),
        (0.500000000000033, 0.315300968740808, 0.315300968740796),
    )),
    63: (0.1306019374817, (
        (0.869398062518221, 0.869398062518221, 0.869398062518221),
        (0.130601937481779, 0.869398062518221, 0.869398062518221),
        (0.869398062518221, 0.130601937481779, 0.869398062518221),
        (0.130601937481779, 0.130601937481779, 0.869398062518221),
        (0.869398062518221, 0.869398062518221, 0.130601937481779),
        (0.130601937481779, 0.869398062518221, 0.130601937481779),
        (0.869398062518221, 0.130601937481779, 0.130601937481779),
        (0.130601937481779, 0.130601937481779, 0.130601937481779),
        (0.500000000000100, 0.869398062518221, 0.869398062518221),
        (0.869398062518221, 0.500000000000089, 0.869398062518221),
        (0.869398062518221, 0.869398062518221, 0.500000000000097),
        (0.130601937481779, 0.500000000000090, 0.869398062518221),
        (0.130601937481779, 0.869398062518221, 0.500000000000097),
        (0.500000000000046, 0.130601937481779, 0.869398062518221),
        (0.500000000000049, 0.869398062518221, 0.130601937481779),
        (0.869398062518221, 0.130601937481779, 0.500000000000080),
        (0.869398062518221, 0.500000000000097, 0.130601937481779),
        (0.130601937481779, 0.130601937481779, 0.500000000000072),
        (0.130601937481779, 0.500000000000094, 0.130601937481779),
        (0.500000000000106, 0.130601937481779, 0.130601937481779),
        (0.684699031259210, 0.684699031259267, 0.869398062518221),
        (0.684699031259188, 0.869398062518221, 0.684699031259276),
        (0.315300968740813, 0.684699031259263, 0.869398062518221),
        (0.869398062518221, 0.684699031259205, 0.684699031259253),
        (0.315300968740828, 0.869398062518221, 0.684699031259266),
        (0.684699031259243, 0.315300968740796, 0.869398062518221),
        (0.130601937481779, 0.684699031259207, 0.684699031259253),
        (0.315300968740750, 0.315300968740803, 0.869398062518221),
        (0.869398062518221, 0.315300968740833, 0.684699031259266),
        (0.684699031259242, 0.869398062518221, 0.315300968740816),
        (0.869398062518221, 0.684699031259272, 0.315300968740829),
        (0.315300968740754, 0.869398062518221, 0.315300968740820),
        (0.684699031259215, 0.130601937481779, 0.684699031259252),
        (0.130601937481779, 0.315300968740829, 0.684699031259266),
        (0.315300968740799, 0.130601937481779, 0.684699031259234),
        (0.130601937481779, 0.684699031259277, 0.315300968740821),
        (0.684699031259215, 0.684699031259250, 0.130601937481779),
        (0.869398062518221, 0.315300968740762, 0.315300968740823),
        (0.315300968740799, 0.684699031259237, 0.130601937481779),
        (0.684699031259266, 0.130601937481779, 0.315300968740817),
        (0.130601937481779, 0.315300968740758, 0.315300968740816),
        (0.684699031259253, 0.315300968740796, 0.130601937481779),
        (0.315300968740757, 0.130601937481779, 0.315300968740824),
        (0.315300968740765, 0.315300968740805, 0.130601937481779),
        (0.500000000000015, 0.500000000000106, 0.869398062518221),
        (0.500000000000013, 0.869398062518221, 0.500000000000055),
        (0.869398062518221, 0.499999999999984, 0.500000000000058),
        (0.130601937481779, 0.499999999999979, 0.500000000000052),
        (0.500000000000036, 0.130601937481779, 0.500000000000066),
        (0.500000000000032, 0.500000000000092, 0.130601937481779),
        (0.500000000000064, 0.684699031259303, 0.684699031259269),
        (0.684699031259275, 0.500000000000092, 0.684699031259249),
        (0.684699031259238, 0.684699031259217, 0.500000000000150),
        (0.315300968740713, 0.500000000000097, 0.684699031259254),
        (0.315300968740743, 0.684699031259216, 0.500000000000140),
        (0.499999999999991, 0.315300968740744, 0.684699031259254),
        (0.499999999999992, 0.684699031259222, 0.315300968740771),
        (0.684699031259216, 0.315300968740745, 0.500000000000114),
        (0.684699031259190, 0.500000000000062, 0.315300968740764),
        (0.315300968740771, 0.315300968740751, 0.500000000000114),
        (0.315300968740792, 0.500000000000075, 0.315300968740766),
        (0.500000000000033, 0.315300968740808, 0.315300968740796),
        (0.499999999999998, 0.500000000000031, 0.500000000000060),
    )),
    64: (0.1249999999999, (
        (0.125000000000000, 0.125000000000000, 0.125000000000000),
        (0.125000000000000, 0.125000000000000, 0.375000000000000),
        (0.125000000000000, 0.125000000000000, 0.625000000000000),
        (0.125000000000000, 0.125000000000000, 0.875000000000000),
        (0.125000000000000, 0.375000000000000, 0.125000000000000),
        (0.125000000000000, 0.375000000000000, 0.375000000000000),
        (0.125000000000000, 0.375000000000000, 0.625000000000000),
        (0.125000000000000, 0.375000000000000, 0.875000000000000),
        (0.125000000000000, 0.625000000000000, 0.125000000000000),
        (0.125000000000000, 0.625000000000000, 0.375000000000000),
        (0.125000000000000, 0.625000000000000, 0.625000000000000),
        (0.125000000000000, 0.625000000000000, 0.875000000000000),
        (0.125000000000000, 0.875000000000000, 0.125000000000000),
        (0.125000000000000, 0.875000000000000, 0.375000000000000),
        (0.125000000000000, 0.875000000000000, 0.625000000000000),
        (0.125000000000000, 0.875000000000000, 0.875000000000000),
        (0.375000000000000, 0.125000000000000, 0.125000000000000),
        (0.375000000000000, 0.125000000000000, 0.375000000000000),
        (0.375000000000000, 0.125000000000000, 0.625000000000000),
        (0.375000000000000, 0.125000000000000, 0.875000000000000),
        (0.375000000000000, 0.375000000000000, 0.125000000000000),
        (0.375000000000000, 0.375000000000000, 0.375000000000000),
        (0.375000000000000, 0.375000000000000, 0.625000000000000),
        (0.375000000000000, 0.375000000000000, 0.875000000000000),
        (0.375000000000000, 0.625000000000000, 0.125000000000000),
        (0.375000000000000, 0.625000000000000, 0.375000000000000),
        (0.375000000000000, 0.625000000000000, 0.625000000000000),
        (0.375000000000000, 0.625000000000000, 0.875000000000000),
        (0.375000000000000, 0.875000000000000, 0.125000000000000),
        (0.375000000000000, 0.875000000000000, 0.375000000000000),
        (0.375000000000000, 0.875000000000000, 0.625000000000000),
        (0.375000000000000, 0.875000000000000, 0.875000000000000),
        (0.625000000000000, 0.125000000000000, 0.125000000000000),
        (0.625000000000000, 0.125000000000000, 0.375000000000000),
        (0.625000000000000, 0.125000000000000, 0.625000000000000),
        (0.625000000000000, 0.125000000000000, 0.875000000000000),
        (0.625000000000000, 0.375000000000000, 0.125000000000000),
        (0.625000000000000, 0.375000000000000, 0.375000000000000),
        (0.625000000000000, 0.375000000000000, 0.625000000000000),
        (0.625000000000000, 0.375000000000000, 0.875000000000000),
        (0.625000000000000, 0.625000000000000, 0.125000000000000),
        (0.625000000000000, 0.625000000000000, 0.375000000000000),
        (0.625000000000000, 0.625000000000000, 0.625000000000000),
        (0.625000000000000, 0.625000000000000, 0.875000000000000),
        (0.625000000000000, 0.875000000000000, 0.125000000000000),
        (0.625000000000000, 0.875000000000000, 0.375000000000000),
        (0.625000000000000, 0.875000000000000, 0.625000000000000),
        (0.625000000000000, 0.875000000000000, 0.875000000000000),
        (0.875000000000000, 0.125000000000000, 0.125000000000000),
        (0.875000000000000, 0.125000000000000, 0.375000000000000),
        (0.875000000000000, 0.125000000000000, 0.625000000000000),
        (0.875000000000000, 0.125000000000000, 0.875000000000000),
        (0.875000000000000, 0.375000000000000, 0.125000000000000),
        (0.875000000000000, 0.375000000000000, 0.375000000000000),
        (0.875000000000000, 0.375000000000000, 0.625000000000000),
        (0.875000000000000, 0.375000000000000, 0.875000000000000),
        (0.875000000000000, 0.625000000000000, 0.125000000000000),
        (0.875000000000000, 0.625000000000000, 0.375000000000000),
        (0.875000000000000, 0.625000000000000, 0.625000000000000),
        (0.875000000000000, 0.625000000000000, 0.875000000000000),
        (0.875000000000000, 0.875000000000000, 0.125000000000000),
        (0.875000000000000, 0.875000000000000, 0.375000000000000),
        (0.875000000000000, 0.875000000000000, 0.625000000000000),
        (0.875000000000000, 0.875000000000000, 0.875000000000000),
    )),
}
