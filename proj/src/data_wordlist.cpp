#include "numforge/data.hpp"

namespace numforge::data {
namespace {

// Space-separated surface vocabulary; lowercase alphabetic tokens only.
const char kWords[] =
    "able ableish ablely ableness acorn acornful acornhood acornless acornlet acornlike acornship airiliness airily airiness airy airyish amber amberful amberhood amberless amberlet amberlike ambership amble ambled ambler ambling ample ampleish amplely ampleness anchor anchored anchorer anchorful anchorhood anchoring anchorless anchorlet anchorlike anchorship ancient ancientish anciently ancientness angle angleful anglehood angleless anglelet anglelike angleship ankle ankleful anklehood ankleless anklelet anklelike ankleship answer answered answerer answering antler antlerful antlerhood antlerless antlerlet antlerlike antlership apple appleful applehood appleless applelet applelike appleship apron apronful apronhood apronless apronlet apronlike apronship arbor arborful arborhood arborless arborlet arborlike arborship arch archful archhood archive archived archiver archiving archless archlet archlike archship arid aridish aridly aridness arrow arrowful arrowhood arrowless arrowlet arrowlike arrowship ash ashbarn ashbeck ashbird ashbourne ashbridge ashbrook ashburn ashbury ashcliff ashcombe ashcove ashcrag ashcroft ashdale ashdell ashden ashfell ashfen ashfield ashford ashfrith ashful ashgate ashglen ashhood ashland ashlea ashless ashlet ashley ashlike ashmark ashmarsh ashmere ashmill ashmoor ashness ashpoint ashpool ashport ashridge ashshaw ashshed ashship ashspring ashstead ashstone ashstow ashthorp ashton ashtor ashvale ashwell ashwick ashwood ashworth ask asked asker asking aspen aspenful aspenhood aspenless aspenlet aspenlike aspenship badge badgeful badgehood badgeless badgelet badgelike badger badgerful badgerhood badgerless badgerlet badgerlike badgership badgeship bailey baileyful baileyhood baileyless baileylet baileylike baileyship bake baked baker baking balance balanced balancer balancing bald baldish baldly baldness bale baleful balehood baleless balelet balelike baleship ballad balladful balladhood balladless balladlet balladlike balladship balloon balloonful balloonhood balloonless balloonlet balloonlike balloonship bamboo bambooful bamboohood bambooless bamboolet bamboolike bambooship band banded bander banding bank banked banker banking banner bannerful bannerhood bannerless bannerlet bannerlike bannership bare bareish barely bareness barge bargeful bargehood bargeless bargelet bargelike bargeship bark barkful barkhood barkless barklet barklike barkship barley barleybarn barleybeck barleybird barleybourne barleybridge barleybrook barleyburn barleybury barleycliff barleycombe barleycove barleycrag barleycroft barleydale barleydell barleyden barleyfell barleyfen barleyfield barleyford barleyfrith barleyful barleygate barleyglen barleyham barleyhaven barleyhead barleyhill barleyholt barleyhood barleyhouse barleyhowe barleyhurst barleyland barleylea barleyless barleylet barleyley barleylike barleymark barleymarsh barleymere barleymill barleymoor barleyness barleypoint barleypool barleyport barleyridge barleyshaw barleyshed barleyship barleyspring barleystead barleystone barleystow barleythorp barleyton barleytor barleyvale barleywell barleywick barleywood barleyworth barn barnbeck barnbird barnbourne barnbridge barnbrook barnburn barnbury barncliff barncombe barncove barncrag barncroft barndale barndell barnden barnfell barnfen barnfield barnford barnfrith barnful barngate barnglen barnham barnhaven barnhead barnhill barnholt barnhood barnhouse barnhowe barnhurst barnland barnlea barnless barnlet barnley barnlike barnmark barnmarsh barnmere barnmill barnmoor barnpoint barnpool barnport barnridge barnshaw barnshed barnship barnspring barnstead barnstone barnstow barnthorp barnton barntor barnvale barnwell barnwick barnwood barnworth barrel barrelful barrelhood barrelless barrellet barrellike barrelship barter bartered barterer bartering basil basilful basilhood basilless basillet basillike basilship basin basinful basinhood basinless basinlet basinlike basinship basket basketful baskethood basketless basketlet basketlike basketship baste basted baster basting bathe bathed bather bathing bay bayful bayhood bayless baylet baylike bayship beach beachful beachhood beachless beachlet beachlike beachship beacon beaconful beaconhood beaconless beaconlet beaconlike beaconship beak beakful beakhood beakless beaklet beaklike beakship beam beamful beamhood beamless beamlet beamlike beamship bean beanful beanhood beanless beanlet beanlike beanship bear bearbarn bearbeck bearbird bearbourne bearbridge bearbrook bearburn bearbury bearcliff bearcombe bearcove bearcrag bearcroft beardale beardell bearden bearfell bearfen bearfield bearford bearfrith bearful beargate bearglen bearham bearhaven bearhead bearhill bearholt bearhood bearhouse bearhowe bearhurst bearland bearlea bearless bearlet bearley bearlike bearmark bearmarsh bearmere bearmill bearmoor bearness bearpoint bearpool bearport bearshaw bearshed bearship bearspring bearstead bearstone bearstow bearthorp bearton beartor bearvale bearwell bearwick bearwood bearworth beaver beaverful beaverhood beaverless beaverlet beaverlike beavership beckon beckoned beckoner beckoning beech beechful beechhood beechless beechlet beechlike beechship beetle beetleful beetlehood beetleless beetlelet beetlelike beetleship behold beholded beholder beholding bell bellful bellhood bellless belllet belllike bellow bellowed bellower bellowing bellship belt beltful belthood beltless beltlet beltlike beltship bench benchful benchhood benchless benchlet benchlike benchship bend bended bender bending berry berrybarn berrybeck berrybird berrybourne berrybridge berrybrook berryburn berrybury berrycliff berrycombe berrycove berrycrag berrycroft berrydale berrydell berryden berryfell berryfen berryfield berryford berryfrith berryful berrygate berryglen berryham berryhaven berryhead berryhill berryholt berryhood berryhouse berryhowe berryhurst berryland berrylea berryless berrylet berryley berrylike berrymark berrymarsh berrymere berrymill berrymoor berryness berrypoint berrypool berryport berryridge berryshaw berryshed berryship berryspring berrystead berrystone berrystow berrythorp berryton berrytor berryvale berrywell berrywick berrywood berryworth bicker bickered bickerer bickering big bigish bigly bigness bind binded binder binding birch birchbarn birchbeck birchbird birchbourne birchbridge birchbrook birchburn birchbury birchcliff birchcombe birchcove birchcrag birchcroft birchdale birchdell birchden birchfell birchfen birchfield birchford birchfrith birchful birchgate birchglen birchhood birchland birchlea birchless birchlet birchley birchlike birchmark birchmarsh birchmere birchmill birchmoor birchness birchpoint birchpool birchport birchridge birchshaw birchshed birchship birchspring birchstead birchstone birchstow birchthorp birchton birchtor birchvale birchwell birchwick birchwood birchworth bird birdful birdhood birdless birdlet birdlike birdship bison bisonful bisonhood bisonless bisonlet bisonlike bisonship bitter bitterish bitterly bitterness blackbarn blackbeck blackbird blackbourne blackbridge blackbrook blackburn blackbury blackcliff blackcombe blackcove blackcrag blackcroft blackdale blackdell blackden blackfell blackfen blackfield blackford blackfrith blackgate blackglen blackham blackhaven blackhead blackhill blackholt blackhouse blackhowe blackhurst blackland blacklea blackley blackmark blackmarsh blackmere blackmill blackmoor blackness blackpoint blackpool blackport blackridge blackshaw blackshed blackspring blackstead blackstone blackstow blackthorp blackton blacktor blackvale blackwell blackwick blackwood blackworth blade bladeful bladehood bladeless bladelet bladelike bladeship bland blandish blandly blandness blanket blanketful blankethood blanketless blanketlet blanketlike blanketship blaze blazed blazer blazing bleak bleakish bleakly bleakness blend blended blender blending bless blessed blesser blessing bloom bloomed bloomer blooming blossom blossomful blossomhood blossomless blossomlet blossomlike blossomship blot bloted bloter bloting blunt bluntish bluntly bluntness blur blured blurer bluring board boardful boardhood boardless boardlet boardlike boardship boast boasted boaster boasting boat boatful boathood boatless boatlet boatlike boatship bobbin bobbinful bobbinhood bobbinless bobbinlet bobbinlike bobbinship bog bogful boghood bogless boglet boglike bogship boil boiled boiler boiling bold boldish boldly boldness bolster bolstered bolsterer bolstering bolt bolted bolter boltful bolthood bolting boltless boltlet boltlike boltship bone boneful bonehood boneless bonelet bonelike boneship bonnet bonnetful bonnethood bonnetless bonnetlet bonnetlike bonnetship book bookful bookhood bookless booklet booklike bookship boot bootful boothood bootless bootlet bootlike bootship border borderful borderhood borderless borderlet borderlike bordership borrow borrowed borrower borrowing bottle bottleful bottlehood bottleless bottlelet bottlelike bottleship bough boughful boughhood boughless boughlet boughlike boughship boulder boulderful boulderhood boulderless boulderlet boulderlike bouldership bounce bounced bouncer bouncing bow bowed bower bowful bowhood bowing bowl bowless bowlet bowlful bowlhood bowlike bowlless bowllet bowllike bowlship bowship box boxful boxhood boxless boxlet boxlike boxship bracken brackenful brackenhood brackenless brackenlet brackenlike brackenship braid braided braider braiding bramble brambleful bramblehood brambleless bramblelet bramblelike brambleship branch branchful branchhood branchless branchlet branchlike branchship brand branded brander branding brash brashish brashly brashness brass brassful brasshood brassless brasslet brasslike brassship brave braveish bravely braveness bread breadful breadhood breadless breadlet breadlike breadship breeze breezeful breezehood breezeless breezelet breezelike breezeship brew brewed brewer brewing brick brickful brickhood brickless bricklet bricklike brickship bridge bridgebarn bridgebeck bridgebird bridgebourne bridgebrook bridgeburn bridgebury bridgecliff bridgecombe bridgecove bridgecrag bridgecroft bridgedale bridgedell bridgeden bridgefell bridgefen bridgefield bridgeford bridgefrith bridgeful bridgegate bridgeglen bridgeham bridgehaven bridgehead bridgehill bridgeholt bridgehood bridgehouse bridgehowe bridgehurst bridgeland bridgelea bridgeless bridgelet bridgeley bridgelike bridgemark bridgemarsh bridgemere bridgemill bridgemoor bridgeness bridgepoint bridgepool bridgeport bridgeridge bridgeshaw bridgeshed bridgeship bridgespring bridgestead bridgestone bridgestow bridgethorp bridgeton bridgetor bridgevale bridgewell bridgewick bridgewood bridgeworth bridle bridled bridler bridling brief briefish briefly briefness bright brighten brightened brightener brightening brightish brightly brightness brim brimful brimhood brimless brimlet brimlike brimship brine brineful brinehood brineless brinelet brinelike brineship bring bringed bringer bringing brisk briskish briskly briskness bristle bristled bristler bristling broad broaden broadened broadener broadening broadish broadly broadness brood brooded brooder brooding brook brookbarn brookbeck brookbird brookbourne brookbridge brookburn brookbury brookcliff brookcombe brookcove brookcrag brookcroft brookdale brookdell brookden brookfell brookfen brookfield brookford brookfrith brookful brookgate brookglen brookham brookhaven brookhead brookhill brookholt brookhood brookhouse brookhowe brookhurst brookland brooklea brookless brooklet brookley brooklike brookmark brookmarsh brookmere brookmill brookmoor brookness brookpoint brookpool brookport brookridge brookshaw brookshed brookship brookspring brookstead brookstone brookstow brookthorp brookton brooktor brookvale brookwell brookwick brookwood brookworth broom broomful broomhood broomless broomlet broomlike broomship brush brushed brusher brushing bucket bucketful buckethood bucketless bucketlet bucketlike bucketship buckle buckled buckleful bucklehood buckleless bucklelet "
    "bucklelike buckler buckleship buckling bud budful budge budged budger budgie budgieful budgiehood budgieless budgielet budgielike budgieship budging budhood budless budlet budlike budship buffalo buffaloful buffalohood buffaloless buffalolet buffalolike buffaloship bugle bugleful buglehood bugleless buglelet buglelike bugleship build builded builder building bundle bundled bundler bundling bunting buntingful buntinghood buntingless buntinglet buntinglike buntingship burnish burnished burnisher burnishing burrow burrowed burrower burrowful burrowhood burrowing burrowless burrowlet burrowlike burrowship bush bushful bushhood bushless bushlet bushlike bushship bustle bustled bustler bustling butter butterful butterhood butterless butterlet butterlike buttership button buttonful buttonhood buttonless buttonlet buttonlike buttonship cabin cabinful cabinhood cabinless cabinlet cabinlike cabinship cable cableful cablehood cableless cablelet cablelike cableship cairn cairnful cairnhood cairnless cairnlet cairnlike cairnship call called caller calling calm calmed calmer calming calmish calmly calmness camel camelful camelhood camelless camellet camellike camelship camp camped camper camping candle candleful candlehood candleless candlelet candlelike candleship canoe canoeful canoehood canoeless canoelet canoelike canoeship canvas canvasful canvashood canvasless canvaslet canvaslike canvasship canyon canyonful canyonhood canyonless canyonlet canyonlike canyonship cape capeful capehood capeless capelet capelike capeship carp carpful carphood carpless carplet carplike carpship cart cartful carthood cartless cartlet cartlike cartship carve carved carver carverful carverhood carverless carverlet carverlike carvership carving cascade cascadeful cascadehood cascadeless cascadelet cascadelike cascadeship cask caskful caskhood caskless casklet casklike caskship cast casted caster casting castle castleful castlehood castleless castlelet castlelike castleship cat catch catched catcher catching catful cathood catless catlet catlike catship cease ceased ceaser ceasing cedar cedarful cedarhood cedarless cedarlet cedarlike cedarship cellar cellarful cellarhood cellarless cellarlet cellarlike cellarship chain chainful chainhood chainless chainlet chainlike chainship chalk chalkful chalkhood chalkless chalklet chalklike chalkship chant chanted chanter chanting chapel chapelful chapelhood chapelless chapellet chapellike chapelship charcoal charcoalful charcoalhood charcoalless charcoallet charcoallike charcoalship chariot chariotful chariothood chariotless chariotlet chariotlike chariotship charm charmed charmer charming chart charted charter chartful charthood charting chartless chartlet chartlike chartship chase chased chaser chasing chasm chasmful chasmhood chasmless chasmlet chasmlike chasmship cheap cheapish cheaply cheapness cherish cherished cherisher cherishing chest chestful chesthood chestless chestlet chestlike chestnut chestnutful chestnuthood chestnutless chestnutlet chestnutlike chestnutship chestship chill chillish chillly chillness chime chimeful chimehood chimeless chimelet chimelike chimeship chisel chiselful chiselhood chiselless chisellet chisellike chiselship chop choped choper choping churchbarn churchbeck churchbird churchbourne churchbridge churchbrook churchburn churchbury churchcliff churchcombe churchcove churchcrag churchcroft churchdale churchdell churchden churchfell churchfen churchfield churchford churchfrith churchgate churchglen churchland churchlea churchley churchmark churchmarsh churchmere churchmill churchmoor churchness churchpoint churchpool churchport churchridge churchshaw churchshed churchspring churchstead churchstone churchstow churchthorp churchton churchtor churchvale churchwell churchwick churchwood churchworth churn churned churner churning cider ciderful ciderhood ciderless ciderlet ciderlike cidership cinder cinderful cinderhood cinderless cinderlet cinderlike cindership circle circleful circlehood circleless circlelet circlelike circleship claim claimed claimer claiming clasp clasped clasper clasping clean cleaned cleaner cleaning cleanish cleanly cleanness clear cleared clearer clearing clearish clearly clearness cliff cliffful cliffhood cliffless clifflet clifflike cliffship climb climbed climber climbing cling clinged clinger clinging cloak cloakful cloakhood cloakless cloaklet cloaklike cloakship clock clockful clockhood clockless clocklet clocklike clockship close closeish closely closeness cloud cloudful cloudhood cloudiliness cloudily cloudiness cloudless cloudlet cloudlike cloudship cloudy cloudyish clover cloverful cloverhood cloverless cloverlet cloverlike clovership clutch clutched clutcher clutching coal coalful coalhood coalless coallet coallike coalship coarse coarseish coarsely coarseness coast coastful coasthood coastless coastlet coastlike coastship coax coaxed coaxer coaxing cobble cobbleful cobblehood cobbleless cobblelet cobblelike cobbleship cobweb cobwebful cobwebhood cobwebless cobweblet cobweblike cobwebship cold coldish coldly coldness collect collected collecter collecting comb combed comber combing comet cometful comethood cometless cometlet cometlike cometship comfort comforted comforter comforting compass compassful compasshood compassless compasslet compasslike compassship cook cooked cooker cooking cool cooled cooler cooling coolish coolly coolness copper copperbarn copperbeck copperbird copperbourne copperbridge copperbrook copperburn copperbury coppercliff coppercombe coppercove coppercrag coppercroft copperdale copperdell copperden copperfell copperfen copperfield copperford copperfrith copperful coppergate copperglen copperham copperhaven copperhead copperhill copperholt copperhood copperhouse copperhowe copperhurst copperland copperlea copperless copperlet copperley copperlike coppermark coppermarsh coppermere coppermill coppermoor copperness copperpoint copperpool copperport coppershaw coppershed coppership copperspring copperstead copperstone copperstow copperthorp copperton coppertor coppervale copperwell copperwick copperwood copperworth coral coralful coralhood coralless corallet corallike coralship cord cordful cordhood cordless cordlet cordlike cordship cork corkful corkhood corkless corklet corklike corkship corn cornbarn cornbeck cornbird cornbourne cornbridge cornbrook cornburn cornbury corncliff corncombe corncove corncrag corncroft corndale corndell cornden cornfell cornfen cornfield cornford cornfrith cornful corngate cornglen cornham cornhaven cornhead cornhill cornholt cornhood cornhouse cornhowe cornhurst cornland cornlea cornless cornlet cornley cornlike cornmark cornmarsh cornmere cornmill cornmoor cornpoint cornpool cornport cornridge cornshaw cornshed cornship cornspring cornstead cornstone cornstow cornthorp cornton corntor cornvale cornwell cornwick cornwood cornworth cosiliness cosily cosiness cosy cosyish cottage cottageful cottagehood cottageless cottagelet cottagelike cottageship cotton cottonful cottonhood cottonless cottonlet cottonlike cottonship count counted counter counting cove coveful covehood coveless covelet covelike cover covered coverer covering coveship crackle crackled crackler crackling cradle cradled cradleful cradlehood cradleless cradlelet cradlelike cradler cradleship cradling craft crafted crafter crafting crag cragful craghood cragless craglet craglike cragship crane cranebarn cranebeck cranebird cranebourne cranebridge cranebrook craneburn cranebury cranecliff cranecombe cranecove cranecrag cranecroft cranedale cranedell craneden cranefell cranefen cranefield craneford cranefrith craneful cranegate craneglen craneham cranehaven cranehead cranehill craneholt cranehood cranehouse cranehowe cranehurst craneland cranelea craneless cranelet craneley cranelike cranemark cranemarsh cranemere cranemill cranemoor craneness cranepoint cranepool craneport craneridge craneshaw craneshed craneship cranespring cranestead cranestone cranestow cranethorp craneton cranetor cranevale cranewell cranewick cranewood craneworth crater craterful craterhood craterless craterlet craterlike cratership crawl crawled crawler crawling creak creaked creaker creaking creek creekful creekhood creekless creeklet creeklike creekship crest crestful cresthood crestless crestlet crestlike crestship cricket cricketful crickethood cricketless cricketlet cricketlike cricketship crisp crispish crisply crispness crocus crocusful crocushood crocusless crocuslet crocuslike crocusship crouch crouched croucher crouching crow crowbarn crowbeck crowbird crowbourne crowbridge crowbrook crowburn crowbury crowcliff crowcombe crowcove crowcrag crowcroft crowdale crowdell crowden crowfell crowfen crowfield crowford crowfrith crowful crowgate crowglen crowham crowhaven crowhead crowhill crowholt crowhood crowhouse crowhowe crowhurst crowland crowlea crowless crowlet crowley crowlike crowmark crowmarsh crowmere crowmill crowmoor crown crowness crownful crownhood crownless crownlet crownlike crownship crowpoint crowpool crowport crowridge crowshaw crowshed crowship crowspring crowstead crowstone crowstow crowthorp crowton crowtor crowvale cruel cruelish cruelly cruelness cruise cruised cruiser cruising crumb crumbful crumbhood crumbless crumblet crumblike crumbship crystal crystalful crystalhood crystalless crystallet crystallike crystalship cull culled culler culling cup cupful cuphood cupless cuplet cuplike cupship curl curled curler curliliness curlily curliness curling curly curlyish current currentful currenthood currentless currentlet currentlike currentship curtain curtainful curtainhood curtainless curtainlet curtainlike curtainship cushion cushionful cushionhood cushionless cushionlet cushionlike cushionship cygnet cygnetful cygnethood cygnetless cygnetlet cygnetlike cygnetship cypress cypressful cypresshood cypressless cypresslet cypresslike cypressship dab dabed daber dabing dagger daggerful daggerhood daggerless daggerlet daggerlike daggership dairy dairyful dairyhood dairyless dairylet dairylike dairyship daisy daisyful daisyhood daisyless daisylet daisylike daisyship dale daleful dalehood daleless dalelet dalelike daleship dam damful damhood damless damlet damlike damp dampish damply dampness damship dance danced dancer dancing dark darkish darkly darkness dart darted darter darting dash dashed dasher dashing daub daubed dauber daubing dawdle dawdled dawdler dawdling dawn dawnful dawnhood dawnless dawnlet dawnlike dawnship daybarn daybeck daybird daybourne daybridge daybrook dayburn daybury daycliff daycombe daycove daycrag daycroft daydale daydell dayden dayfell dayfen dayfield dayford dayfrith daygate dayglen dayham dayhaven dayhead dayhill dayholt dayhouse dayhowe dayhurst dayland daylea dayley daymark daymarsh daymere daymill daymoor dayness daypoint daypool dayport dayridge dayshaw dayshed dayspring daystead daystone daystow daythorp dayton daytor dayvale daywell daywick daywood dayworth dazzle dazzled dazzler dazzling deal dealed dealer dealing deep deepen deepened deepener deepening deepish deeply deepness deer deerful deerhood deerless deerlet deerlike deership defend defended defender defending dell dellful dellhood dellless delllet delllike dellship delta deltaful deltahood deltaless deltalet deltalike deltaship delve delved delver delving dense denseish densely denseness depart departed departer departing dew dewful dewhood dewless dewlet dewlike dewship dig diged diger diging dim dimish dimly dimness dinghy dinghyful dinghyhood dinghyless dinghylet dinghylike dinghyship dip diped diper diping discern discerned discerner discerning dismal dismalish dismally dismalness dizziliness dizzily dizziness dizzy dizzyish dodge dodged dodger dodging dome domeful domehood domeless domelet domelike domeship donkey donkeyful donkeyhood donkeyless donkeylet donkeylike donkeyship door doorful doorhood doorless doorlet doorlike doorship dove doveful dovehood doveless dovelet dovelike doveship down downful downhood "
    "downless downlet downlike downship doze dozed dozer dozing drab drabish drably drabness drain drained drainer draining drake drakeful drakehood drakeless drakelet drakelike drakeship draw drawed drawer drawing dream dreamed dreamer dreaming dreariliness drearily dreariness dreary drearyish drench drenched drencher drenching drift drifted drifter driftful drifthood drifting driftless driftlet driftlike driftship drill drilled driller drilling drily driness drink drinked drinker drinking drive drived driver driving droop drooped drooper drooping drum drumful drumhood drumless drumlet drumlike drumship dry dryish dull dullish dullly dullness dune duneful dunehood duneless dunelet dunelike duneship dusk duskful duskhood duskless dusklet dusklike duskship dustiliness dustily dustiness dusty dustyish dwell dwelled dweller dwelling eager eagerish eagerly eagerness eagle eagleful eaglehood eagleless eaglelet eaglelike eagleship earliliness earlily earliness early earlyish earn earned earner earnest earnestish earnestly earnestness earning earth earthful earthhood earthless earthlet earthlike earthship ease eased easel easelful easelhood easelless easellet easellike easelship easer easiliness easily easiness easing easy easyish eave eaveful eavehood eaveless eavelet eavelike eaveship echo echoed echoer echoful echohood echoing echoless echolet echolike echoship eddy eddyful eddyhood eddyless eddylet eddylike eddyship edge edged edger edging eel eelful eelhood eelless eellet eellike eelship elk elkful elkhood elkless elklet elklike elkship elm elmbarn elmbeck elmbird elmbourne elmbridge elmbrook elmburn elmbury elmcliff elmcombe elmcove elmcrag elmcroft elmdale elmdell elmden elmfell elmfen elmfield elmford elmfrith elmful elmgate elmglen elmham elmhaven elmhead elmhill elmholt elmhood elmhouse elmhowe elmhurst elmland elmlea elmless elmlet elmley elmlike elmness elmpoint elmpool elmport elmridge elmshaw elmshed elmship elmspring elmstead elmstone elmstow elmthorp elmton elmtor elmvale elmwell elmwick elmwood elmworth elope eloped eloper eloping embark embarked embarker embarking ember emberful emberhood emberless emberlet emberlike embership embroider embroidered embroiderer embroidering emptiliness emptily emptiness empty emptyish endure endured endurer enduring engine engineful enginehood engineless enginelet enginelike engineship enrich enriched enricher enriching enroll enrolled enroller enrolling estuary estuaryful estuaryhood estuaryless estuarylet estuarylike estuaryship etch etched etcher etching evade evaded evader evading ewe eweful ewehood eweless ewelet ewelike eweship fade faded fader fading faint faintish faintly faintness fair fairish fairly fairness falcon falconful falconhood falconless falconlet falconlike falconship fallbarn fallbeck fallbird fallbourne fallbridge fallbrook fallburn fallbury fallcliff fallcombe fallcove fallcrag fallcroft falldale falldell fallden fallfell fallfen fallfield fallford fallfrith fallgate fallglen fallham fallhaven fallhead fallhill fallholt fallhouse fallhowe fallhurst fallmark fallmarsh fallmere fallmill fallmoor fallness fallpoint fallpool fallport fallridge fallshaw fallshed fallspring fallstead fallstone fallstow fallthorp fallton falltor fallvale fallwell fallwick fallwood fallworth false falseish falsely falseness fanciliness fancily fanciness fancy fancyish fast fasten fastened fastener fastening fastish fastly fastness fathom fathomed fathomer fathoming favor favored favorer favoring fawn fawnful fawnhood fawnless fawnlet fawnlike fawnship feast feasted feaster feasting feather featherful featherhood featherless featherlet featherlike feathership feeble feebleish feeblely feebleness fell fellful fellhood fellless felllet felllike fellship fen fenbarn fenbeck fenbird fenbourne fenbridge fenbrook fenburn fenbury fencliff fencombe fencove fencrag fencroft fendale fendell fenden fenfell fenfield fenford fenfrith fenful fengate fenglen fenham fenhaven fenhead fenhill fenholt fenhood fenhouse fenhowe fenhurst fenland fenlea fenless fenlet fenley fenlike fenmark fenmarsh fenmere fenmill fenmoor fenpoint fenpool fenport fenridge fenshaw fenshed fenship fenspring fenstead fenstone fenstow fenthorp fenton fentor fenvale fenwell fenwick fenwood fenworth fern fernbarn fernbeck fernbird fernbourne fernbridge fernbrook fernburn fernbury ferncliff ferncombe ferncove ferncrag ferncroft ferndale ferndell fernden fernfell fernfen fernfield fernford fernfrith fernful ferngate fernglen fernham fernhaven fernhead fernhill fernholt fernhood fernhouse fernhowe fernhurst fernland fernlea fernless fernlet fernley fernlike fernmark fernmarsh fernmere fernmill fernmoor fernpoint fernpool fernport fernridge fernshaw fernshed fernship fernspring fernstead fernstone fernstow fernthorp fernton ferntor fernvale fernwell fernwick fernwood fernworth ferret ferretful ferrethood ferretless ferretlet ferretlike ferretship ferry ferryful ferryhood ferryless ferrylet ferrylike ferryship fetch fetched fetcher fetching fiddle fiddled fiddleful fiddlehood fiddleless fiddlelet fiddlelike fiddler fiddleship fiddling fieldbarn fieldbeck fieldbird fieldbourne fieldbridge fieldbrook fieldburn fieldbury fieldcliff fieldcombe fieldcove fieldcrag fieldcroft fieldfell fieldfen fieldford fieldfrith fieldgate fieldglen fieldham fieldhaven fieldhead fieldhill fieldholt fieldhouse fieldhowe fieldhurst fieldland fieldlea fieldley fieldmark fieldmarsh fieldmere fieldmill fieldmoor fieldness fieldpoint fieldpool fieldport fieldridge fieldshaw fieldshed fieldspring fieldstead fieldstone fieldstow fieldthorp fieldton fieldtor fieldvale fieldwell fieldwick fieldwood fieldworth fierce fierceish fiercely fierceness fig figful fighood figless figlet figlike figship fill filled filler filling finch finchbarn finchbeck finchbird finchbourne finchbridge finchbrook finchburn finchbury finchcliff finchcombe finchcove finchcrag finchcroft finchdale finchdell finchden finchfell finchfen finchfield finchford finchfrith finchful finchgate finchglen finchhood finchland finchlea finchless finchlet finchley finchlike finchmark finchmarsh finchmere finchmill finchmoor finchness finchpoint finchpool finchport finchridge finchshaw finchshed finchship finchspring finchstead finchstone finchstow finchthorp finchton finchtor finchvale finchwell finchwick finchwood finchworth fine fineish finely fineness fir fire fireful firehood fireless firelet firelike fireship firful firhood firless firlet firlike firm firmish firmly firmness firship fish fished fisher fishful fishhood fishing fishless fishlet fishlike fishship fit fited fiter fiting fix fixed fixer fixing fjord fjordful fjordhood fjordless fjordlet fjordlike fjordship flag flagful flaghood flagless flaglet flaglike flagship flake flakeful flakehood flakeless flakelet flakelike flakeship flame flameful flamehood flameless flamelet flamelike flameship flank flankful flankhood flankless flanklet flanklike flankship flask flaskful flaskhood flaskless flasklet flasklike flaskship flat flatish flatly flatness flatten flattened flattener flattening flee fleece fleeceful fleecehood fleeceless fleecelet fleecelike fleeceship fleed fleer fleing fling flinged flinger flinging flint flintful flinthood flintless flintlet flintlike flintship flit flited fliter fliting float floated floater floating flock flockful flockhood flockless flocklet flocklike flockship floe floeful floehood floeless floelet floelike floeship flood floodful floodhood floodless floodlet floodlike floodship floor floorful floorhood floorless floorlet floorlike floorship flour flourful flourhood flourish flourished flourisher flourishing flourless flourlet flourlike flourship flow flowed flower flowing fluster flustered flusterer flustering flute fluteful flutehood fluteless flutelet flutelike fluteship flutter fluttered flutterer fluttering foal foalful foalhood foalless foallet foallike foalship foam foamful foamhood foamless foamlet foamlike foamship fog fogful foghood fogless foglet foglike fogship fold folded folder foldful foldhood folding foldless foldlet foldlike foldship folk folkful folkhood folkless folklet folklike folkship follow followed follower following fond fondish fondly fondness forage foraged forager foraging ford fordful fordhood fordless fordlet fordlike fordship forest forestful foresthood forestless forestlet forestlike forestship forge forged forgeful forgehood forgeless forgelet forgelike forger forgeship forging fort fortful forthood fortless fortlet fortlike fortship foster fostered fosterer fostering fountain fountainful fountainhood fountainless fountainlet fountainlike fountainship fox foxbarn foxbeck foxbird foxbourne foxbridge foxbrook foxburn foxbury foxcliff foxcombe foxcove foxcrag foxcroft foxdale foxdell foxden foxfell foxfen foxfield foxford foxfrith foxful foxgate foxglen foxham foxhaven foxhead foxhill foxholt foxhood foxhouse foxhowe foxhurst foxland foxlea foxless foxlet foxley foxlike foxmark foxmarsh foxmere foxmill foxmoor foxness foxpoint foxpool foxport foxridge foxshaw foxshed foxship foxspring foxstead foxstone foxstow foxthorp foxton foxtor foxvale foxwell foxwick foxwood foxworth frail frailish frailly frailness frame framed framer framing frank frankish frankly frankness free freeish freely freeness fresh freshish freshly freshness frolic froliced frolicer frolicing frost frostful frosthood frostless frostlet frostlike frostship frown frowned frowner frowning full fullish fullly fullness furrow furrowful furrowhood furrowless furrowlet furrowlike furrowship gain gained gainer gaining gale galeful galehood galeless galelet galelike galeship gallop galloped galloper galloping gannet gannetful gannethood gannetless gannetlet gannetlike gannetship garden gardenful gardenhood gardenless gardenlet gardenlike gardenship garland garlandful garlandhood garlandless garlandlet garlandlike garlandship garnet garnetful garnethood garnetless garnetlet garnetlike garnetship gate gatebarn gatebeck gatebird gatebourne gatebridge gatebrook gateburn gatebury gatecliff gatecombe gatecove gatecrag gatecroft gatedale gatedell gateden gatefell gatefen gatefield gateford gatefrith gateful gateglen gateham gatehaven gatehead gatehill gateholt gatehood gatehouse gatehowe gatehurst gateland gatelea gateless gatelet gateley gatelike gatemark gatemarsh gatemere gatemill gatemoor gateness gatepoint gatepool gateport gateridge gateshaw gateshed gateship gatespring gatestead gatestone gatestow gatethorp gateton gatetor gatevale gatewell gatewick gatewood gateworth gather gathered gatherer gathering gaunt gauntish gauntly gauntness gaze gazed gazelle gazelleful gazellehood gazelleless gazellelet gazellelike gazelleship gazer gazing gear gearful gearhood gearless gearlet gearlike gearship gentle gentleish gentlely gentleness geyser geyserful geyserhood geyserless geyserlet geyserlike geysership gild gilded gilder gilding ginger gingerful gingerhood gingerless gingerlet gingerlike gingership glacier glacierful glacierhood glacierless glacierlet glacierlike glaciership glad gladden gladdened gladdener gladdening glade gladeful gladehood gladeless gladelet gladelike gladeship gladish gladly gladness glance glanced glancer glancing glean gleaned gleaner gleaning glen glenful glenhood glenless glenlet glenlike glenship glide glided glider gliding glimmer glimmered glimmerer glimmering glisten glistened glistener glistening glossiliness glossily glossiness glossy glossyish glow glowed glower glowing glum glumish glumly glumness gnaw gnawed gnawer gnawing goat goatful goathood goatless goatlet goatlike goatship goldbarn goldbeck goldbird goldbourne goldbridge goldbrook goldburn goldbury goldcliff goldcombe goldcove goldcrag goldcroft goldfell goldfen goldfield goldford goldfrith goldgate goldglen goldham goldhaven goldhead goldhill goldholt goldhouse goldhowe goldhurst goldland goldlea goldley goldmark goldmarsh goldmere goldmill goldmoor goldness goldpoint goldpool goldport goldridge "
    "goldshaw goldshed goldspring goldstead goldstone goldstow goldthorp goldton goldtor goldvale goldwell goldwick goldwood goldworth goose gooseful goosehood gooseless gooselet gooselike gooseship gorge gorgeful gorgehood gorgeless gorgelet gorgelike gorgeship gorse gorseful gorsehood gorseless gorselet gorselike gorseship gosling goslingful goslinghood goslingless goslinglet goslinglike goslingship gourd gourdful gourdhood gourdless gourdlet gourdlike gourdship grain grainful grainhood grainless grainlet grainlike grainship grand grandish grandly grandness granite graniteful granitehood graniteless granitelet granitelike graniteship grape grapeful grapehood grapeless grapelet grapelike grapeship grasp grasped grasper grasping grass grassful grasshood grassless grasslet grasslike grassship grave graveish gravel gravelful gravelhood gravelless gravellet gravellike gravelship gravely graveness graybarn graybeck graybird graybourne graybridge graybrook grayburn graybury graycliff graycombe graycove graycrag graycroft graydale graydell grayden grayfell grayfen grayfield grayford grayfrith graygate grayglen grayham grayhaven grayhead grayhill grayholt grayhouse grayhowe grayhurst grayland graylea grayley graymark graymarsh graymere graymill graymoor grayness graypoint graypool grayport grayridge grayshaw grayshed grayspring graystead graystone graystow graythorp grayton graytor grayvale graywell graywick graywood grayworth graze grazed grazer grazing great greatish greatly greatness green greenbarn greenbeck greenbird greenbourne greenbridge greenbrook greenburn greenbury greencliff greencombe greencove greencrag greencroft greendale greendell greenden greenfell greenfen greenfield greenford greenfrith greenful greengate greenglen greenham greenhaven greenhead greenhill greenholt greenhood greenhouse greenhowe greenhurst greenish greenland greenlea greenless greenlet greenley greenlike greenly greenmark greenmarsh greenmere greenmill greenmoor greenness greenpoint greenpool greenport greenridge greenshaw greenshed greenship greenspring greenstead greenstone greenstow greenthorp greenton greentor greenvale greenwell greenwick greenwood greenworth greet greeted greeter greeting grim grimish grimly grimness grind grinded grinder grinding grip griped griper griping groom groomed groomer grooming grove groveful grovehood groveless grovelet grovelike groveship grow growed grower growing gruff gruffish gruffly gruffness guard guarded guarder guarding guide guided guider guiding gull gullful gullhood gullless gulllet gulllike gullship gust gustful gusthood gustless gustlet gustlike gustship hail hailed hailer hailful hailhood hailing hailless haillet haillike hailship hale haleish halely haleness hall hallful hallhood hallless halllet halllike hallship halt halted halter halting hamlet hamletful hamlethood hamletless hamletlet hamletlike hamletship hammer hammerful hammerhood hammerless hammerlet hammerlike hammership hamper hampered hamperer hampering handiliness handily handiness handle handled handler handling handy handyish hang hanged hanger hanging happiliness happily happiness happy happyish harbor harborful harborhood harborless harborlet harborlike harborship hard harden hardened hardener hardening hardish hardly hardness hare hareful harehood hareless harelet harelike hareship harp harpful harphood harpless harplet harplike harpship harrow harrowful harrowhood harrowless harrowlet harrowlike harrowship harsh harshish harshly harshness harvest harvested harvester harvestful harvesthood harvesting harvestless harvestlet harvestlike harvestship hasten hastened hastener hastening hastiliness hastily hastiness hasty hastyish hatch hatched hatcher hatchful hatchhood hatching hatchless hatchlet hatchlike hatchship haul hauled hauler hauling hawk hawkful hawkhood hawkless hawklet hawklike hawkship hay haybarn haybeck haybird haybourne haybridge haybrook hayburn haybury haycliff haycombe haycove haycrag haycroft haydale haydell hayden hayfell hayfen hayfield hayford hayfrith hayful haygate hayglen hayham hayhaven hayhead hayhill hayholt hayhood hayhouse hayhowe hayhurst hayland haylea hayless haylet hayley haylike haymark haymarsh haymere haymill haymoor hayness haypoint haypool hayport hayridge hayshaw hayshed hayship hayspring haystead haystone haystow haythorp hayton haytor hayvale haywell haywick haywood hayworth hazel hazelful hazelhood hazelless hazellet hazellike hazelship haziliness hazily haziness hazy hazyish heal healed healer healing heap heaped heaper heaping hear heared hearer hearing heath heathbarn heathbeck heathbird heathbourne heathbridge heathbrook heathburn heathbury heathcliff heathcombe heathcove heathcrag heathcroft heathdale heathdell heathden heather heatherful heatherhood heatherless heatherlet heatherlike heathership heathfell heathfen heathfield heathford heathfrith heathful heathgate heathglen heathhood heathland heathlea heathless heathlet heathley heathlike heathmark heathmarsh heathmere heathmill heathmoor heathness heathpoint heathpool heathport heathridge heathshaw heathshed heathship heathspring heathstead heathstone heathstow heaththorp heathton heathtor heathvale heathwell heathwick heathwood heathworth heave heaved heaver heaviliness heavily heaviness heaving heavy heavyish hedge hedgeful hedgehood hedgeless hedgelet hedgelike hedgeship helm helmful helmhood helmless helmlet helmlike helmship hemp hempful hemphood hempless hemplet hemplike hempship herd herded herder herding heron heronbarn heronbeck heronbird heronbourne heronbridge heronbrook heronburn heronbury heroncliff heroncombe heroncove heroncrag heroncroft herondale herondell heronden heronfell heronfen heronfield heronford heronfrith heronful herongate heronglen heronham heronhaven heronhead heronhill heronholt heronhood heronhouse heronhowe heronhurst heronland heronlea heronless heronlet heronley heronlike heronmark heronmarsh heronmere heronmill heronmoor heronpoint heronpool heronport heronridge heronshaw heronshed heronship heronspring heronstead heronstone heronstow heronthorp heronton herontor heronvale heronwell heronwick heronwood heronworth hew hewed hewer hewing hickory hickoryful hickoryhood hickoryless hickorylet hickorylike hickoryship hide hided hideful hidehood hideless hidelet hidelike hider hideship hiding high highish highly highness hill hillbarn hillbeck hillbird hillbourne hillbridge hillbrook hillburn hillbury hillcliff hillcombe hillcove hillcrag hillcroft hilldale hilldell hillden hillfell hillfen hillfield hillford hillfrith hillful hillgate hillglen hillham hillhaven hillhead hillholt hillhood hillhouse hillhowe hillhurst hillless hilllet hilllike hillmark hillmarsh hillmere hillmill hillmoor hillness hillpoint hillpool hillport hillridge hillshaw hillshed hillship hillspring hillstead hillstone hillstow hillthorp hillton hilltor hillvale hillwell hillwick hillwood hillworth hinge hingeful hingehood hingeless hingelet hingelike hingeship hive hiveful hivehood hiveless hivelet hivelike hiveship hoard hoarded hoarder hoarding hoarse hoarseish hoarsely hoarseness hoe hoeful hoehood hoeless hoelet hoelike hoeship hoist hoisted hoister hoisting hold holded holder holding hollow hollowful hollowhood hollowish hollowless hollowlet hollowlike hollowly hollowness hollowship holly hollyful hollyhood hollyless hollylet hollylike hollyship hone honed honer honey honeybarn honeybeck honeybird honeybourne honeybridge honeybrook honeyburn honeybury honeycliff honeycombe honeycove honeycrag honeycroft honeydale honeydell honeyden honeyfell honeyfen honeyfield honeyford honeyfrith honeyful honeygate honeyglen honeyham honeyhaven honeyhead honeyhill honeyholt honeyhood honeyhouse honeyhowe honeyhurst honeyland honeylea honeyless honeylet honeyley honeylike honeymark honeymarsh honeymere honeymill honeymoor honeyness honeypoint honeypool honeyport honeyridge honeyshaw honeyshed honeyship honeyspring honeystead honeystone honeystow honeythorp honeyton honeytor honeyvale honeywell honeywick honeywood honeyworth honing hood hoodful hoodhood hoodless hoodlet hoodlike hoodship hoof hoofful hoofhood hoofless hooflet hooflike hoofship hook hookful hookhood hookless hooklet hooklike hookship hop hoped hoper hopful hophood hoping hopless hoplet hoplike hopship horn hornful hornhood hornless hornlet hornlike hornship horse horseful horsehood horseless horselet horselike horseship hound houndful houndhood houndless houndlet houndlike houndship house houseful househood houseless houselet houselike houseship hover hovered hoverer hovering huddle huddled huddler huddling hull hullful hullhood hullless hulllet hulllike hullship hum humble humbleish humblely humbleness humed humer huming hunt hunted hunter hunting hurdle hurdleful hurdlehood hurdleless hurdlelet hurdlelike hurdleship hurried hurrier hurry hurrying hush hushed husher hushing hut hutful huthood hutless hutlet hutlike hutship ice iceful icehood iceless icelet icelike iceship icily iciness icy icyish idle idled idleish idlely idleness idler idling inch inched incher inching inlet inletful inlethood inletless inletlet inletlike inletship iris irisful irishood irisless irislet irislike irisship iron ironbarn ironbeck ironbird ironbourne ironbridge ironbrook ironburn ironbury ironcliff ironcombe ironcove ironcrag ironcroft irondale irondell ironden ironfell ironfen ironfield ironford ironfrith ironful irongate ironglen ironham ironhaven ironhead ironhill ironholt ironhood ironhouse ironhowe ironhurst ironland ironlea ironless ironlet ironley ironlike ironmark ironmarsh ironmere ironmill ironmoor ironpoint ironpool ironport ironridge ironshaw ironshed ironship ironspring ironstead ironstone ironstow ironthorp ironton irontor ironvale ironwell ironwick ironwood ironworth island islandful islandhood islandless islandlet islandlike islandship isle isleful islehood isleless islelet islelike isleship ivory ivoryful ivoryhood ivoryless ivorylet ivorylike ivoryship ivy ivyful ivyhood ivyless ivylet ivylike ivyship jar jarful jarhood jarless jarlet jarlike jarship jasmine jasmineful jasminehood jasmineless jasminelet jasminelike jasmineship jay jayful jayhood jayless jaylet jaylike jayship jetty jettyful jettyhood jettyless jettylet jettylike jettyship jewel jewelful jewelhood jewelless jewellet jewellike jewelship jolliliness jollily jolliness jolly jollyish jostle jostled jostler jostling jot joted joter joting journey journeyed journeyer journeying jug jugful jughood jugless juglet juglike jugship juniper juniperful juniperhood juniperless juniperlet juniperlike junipership keel keelful keelhood keelless keellet keellike keelship keen keenish keenly keenness keep keeped keeper keepful keephood keeping keepless keeplet keeplike keepship kelp kelpful kelphood kelpless kelplet kelplike kelpship kettle kettleful kettlehood kettleless kettlelet kettlelike kettleship key keyful keyhood keyless keylet keylike keyship kiln kilnful kilnhood kilnless kilnlet kilnlike kilnship kind kindish kindle kindled kindler kindling kindly kindness kingbarn kingbeck kingbird kingbourne kingbridge kingbrook kingburn kingbury kingcliff kingcombe kingcove kingcrag kingcroft kingdale kingdell kingden kingdom kingdomful kingdomhood kingdomless kingdomlet kingdomlike kingdomship kingfell kingfen kingfield kingford kingfrith kingham kinghaven kinghead kinghill kingholt kinghouse kinghowe kinghurst kingland kinglea kingley kingmark kingmarsh kingmere kingmill kingmoor kingness kingpoint kingpool kingport kingridge kingshaw kingshed kingspring kingstead kingstone kingstow kingthorp kington kingtor kingvale kingwell kingwick kingwood kingworth kite kiteful kitehood kiteless kitelet kitelike kiteship knead kneaded kneader kneading kneel kneeled kneeler kneeling knit knited kniter kniting knock knocked knocker knocking knoll knollful knollhood knollless knolllet knolllike knollship labor labored laborer laboring ladder ladderful ladderhood ladderless ladderlet ladderlike laddership "
    "ladle ladled ladler ladling lagoon lagoonful lagoonhood lagoonless lagoonlet lagoonlike lagoonship lake lakebarn lakebeck lakebird lakebourne lakebridge lakebrook lakeburn lakebury lakecliff lakecombe lakecove lakecrag lakecroft lakedale lakedell lakeden lakefell lakefen lakefield lakeford lakefrith lakeful lakegate lakeglen lakeham lakehaven lakehead lakehill lakeholt lakehood lakehouse lakehowe lakehurst lakeland lakelea lakeless lakelet lakeley lakelike lakemark lakemarsh lakemere lakemill lakemoor lakeness lakepoint lakepool lakeport lakeridge lakeshaw lakeshed lakeship lakespring lakestead lakestone lakestow lakethorp laketon laketor lakevale lakewell lakewick lakewood lakeworth lamb lambful lambhood lambless lamblet lamblike lambship lament lamented lamenter lamenting land landed lander landing lane laneful lanehood laneless lanelet lanelike laneship lantern lanternful lanternhood lanternless lanternlet lanternlike lanternship lapwing lapwingful lapwinghood lapwingless lapwinglet lapwinglike lapwingship larch larchful larchhood larchless larchlet larchlike larchship large largeish largely largeness lark larkbarn larkbeck larkbird larkbourne larkbridge larkbrook larkburn larkbury larkcliff larkcombe larkcove larkcrag larkcroft larkdale larkdell larkden larkfell larkfen larkfield larkford larkfrith larkful larkgate larkglen larkham larkhaven larkhead larkhill larkholt larkhood larkhouse larkhowe larkhurst larkland larklea larkless larklet larkley larklike larkmark larkmarsh larkmere larkmill larkmoor larkness larkpoint larkpool larkport larkridge larkshaw larkshed larkship larkspring larkstead larkstone larkstow larkthorp larkton larktor larkvale larkwell larkwick larkwood larkworth lash lashed lasher lashing latch latched latcher latchful latchhood latching latchless latchlet latchlike latchship late lateish lately lateness laugh laughed laugher laughing launch launched launcher launching lawn lawnful lawnhood lawnless lawnlet lawnlike lawnship laziliness lazily laziness lazy lazyish lead leadful leadhood leadless leadlet leadlike leadship leaf leafful leafhood leafless leaflet leaflike leafship lean leaned leaner leaning leanish leanly leanness leap leaped leaper leaping learn learned learner learning ledge ledgeful ledgehood ledgeless ledgelet ledgelike ledgeship leek leekful leekhood leekless leeklet leeklike leekship lemon lemonful lemonhood lemonless lemonlet lemonlike lemonship lend lended lender lending lessen lessened lessener lessening level leveled leveler leveling lichen lichenful lichenhood lichenless lichenlet lichenlike lichenship lift lifted lifter lifting light lightish lightly lightness lilac lilacful lilachood lilacless lilaclet lilaclike lilacship lily lilyful lilyhood lilyless lilylet lilylike lilyship lime limeful limehood limeless limelet limelike limeship limp limpish limply limpness linen linenful linenhood linenless linenlet linenlike linenship linger lingered lingerer lingering linnet linnetful linnethood linnetless linnetlet linnetlike linnetship lint lintful linthood lintless lintlet lintlike lintship lion lionful lionhood lionless lionlet lionlike lionship list listed listen listened listener listening lister listing little littleish littlely littleness live lived liveliliness livelily liveliness lively livelyish liver living lizard lizardful lizardhood lizardless lizardlet lizardlike lizardship load loaded loader loading loaf loafful loafhood loafless loaflet loaflike loafship loan loaned loaner loaning lobster lobsterful lobsterhood lobsterless lobsterlet lobsterlike lobstership loch lochful lochhood lochless lochlet lochlike lochship lock locket locketful lockethood locketless locketlet locketlike locketship lockful lockhood lockless locklet locklike lockship lodge lodgeful lodgehood lodgeless lodgelet lodgelike lodgeship loft loftful lofthood loftiliness loftily loftiness loftless loftlet loftlike loftship lofty loftyish log logful loghood logless loglet loglike logship loiter loitered loiterer loitering lone loneish lonely loneness long longed longer longing longish longly longness look looked looker looking loom loomed loomer loomful loomhood looming loomless loomlet loomlike loomship loose looseish loosely loosen loosened loosener looseness loosening lotus lotusful lotushood lotusless lotuslet lotuslike lotusship loud loudish loudly loudness low lowish lowly lowness loyal loyalish loyally loyalness luckiliness luckily luckiness lucky luckyish lull lulled luller lulling lumber lumbered lumberer lumbering lurch lurched lurcher lurching lute luteful lutehood luteless lutelet lutelike luteship lynx lynxful lynxhood lynxless lynxlet lynxlike lynxship mallow mallowful mallowhood mallowless mallowlet mallowlike mallowship mantle mantleful mantlehood mantleless mantlelet mantlelike mantleship maple mapleful maplehood mapleless maplelet maplelike mapleship marble marbleful marblehood marbleless marblelet marblelike marbleship mare mareful marehood mareless marelet marelike mareship marigold marigoldful marigoldhood marigoldless marigoldlet marigoldlike marigoldship mark marked marker market marketful markethood marketless marketlet marketlike marketship marking marsh marshbarn marshbeck marshbird marshbourne marshbridge marshbrook marshburn marshbury marshcliff marshcombe marshcove marshcrag marshcroft marshdale marshdell marshden marshfell marshfen marshfield marshford marshfrith marshful marshgate marshglen marshhood marshland marshlea marshless marshlet marshley marshlike marshmark marshmere marshmill marshmoor marshness marshpoint marshpool marshport marshridge marshshaw marshshed marshship marshspring marshstead marshstone marshstow marshthorp marshton marshtor marshvale marshwell marshwick marshwood marshworth marvel marveled marveler marveling mast mastful masthood mastless mastlet mastlike mastship meadow meadowbarn meadowbeck meadowbird meadowbourne meadowbridge meadowbrook meadowburn meadowbury meadowcliff meadowcombe meadowcove meadowcrag meadowcroft meadowdale meadowdell meadowden meadowfell meadowfen meadowfield meadowford meadowfrith meadowful meadowgate meadowglen meadowham meadowhaven meadowhead meadowhill meadowholt meadowhood meadowhouse meadowhowe meadowhurst meadowland meadowlea meadowless meadowlet meadowley meadowlike meadowmark meadowmarsh meadowmere meadowmill meadowmoor meadowness meadowpoint meadowpool meadowport meadowridge meadowshaw meadowshed meadowship meadowspring meadowstead meadowstone meadowstow meadowthorp meadowton meadowtor meadowvale meander meandered meanderer meandering meet meeted meeter meeting mellow mellowish mellowly mellowness melon melonful melonhood melonless melonlet melonlike melonship mend mended mender mending merlin merlinful merlinhood merlinless merlinlet merlinlike merlinship merriliness merrily merriness merry merryish mesa mesaful mesahood mesaless mesalet mesalike mesaship mild mildish mildly mildness milkiliness milkily milkiness milky milkyish mill millbarn millbeck millbird millbourne millbridge millbrook millburn millbury millcliff millcombe millcove millcrag millcroft milldale milldell millden millet milletful millethood milletless milletlet milletlike milletship millfell millfen millfield millford millfrith millful millgate millglen millham millhaven millhead millhill millholt millhood millhouse millhowe millhurst millless milllet milllike millmark millmarsh millmere millmoor millness millpoint millpool millport millridge millshaw millshed millship millspring millstead millstone millstow millthorp millton milltor millvale millwell millwick millwood millworth mingle mingled mingler mingling mink minkful minkhood minkless minklet minklike minkship minnow minnowful minnowhood minnowless minnowlet minnowlike minnowship mint mintful minthood mintless mintlet mintlike mintship mirror mirrorful mirrorhood mirrorless mirrorlet mirrorlike mirrorship mist mistful misthood mistiliness mistily mistiness mistless mistlet mistlike mistship misty mistyish moat moatful moathood moatless moatlet moatlike moatship moist moistish moistly moistness mold molded molder molding mole moleful molehill molehood moleless molelet molelike moleship monsoon monsoonful monsoonhood monsoonless monsoonlet monsoonlike monsoonship moonbarn moonbeck moonbird moonbourne moonbridge moonbrook moonburn moonbury mooncliff mooncombe mooncove mooncrag mooncroft moondale moondell moonden moonfell moonfen moonfield moonford moonfrith moongate moonglen moonham moonhaven moonhead moonhill moonholt moonhouse moonhowe moonhurst moonland moonlea moonley moonmark moonmarsh moonmere moonmill moonmoor moonpoint moonpool moonport moonridge moonshaw moonshed moonspring moonstead moonstone moonstow moonthorp moonton moontor moonvale moonwell moonwick moonwood moonworth moor moorbarn moorbeck moorbird moorbourne moorbridge moorbrook moorburn moorbury moorcliff moorcombe moorcove moorcrag moorcroft moordale moordell moorden moored moorer moorfell moorfen moorfield moorford moorfrith moorful moorgate moorglen moorham moorhaven moorhead moorhill moorholt moorhood moorhouse moorhowe moorhurst mooring moorland moorlea moorless moorlet moorley moorlike moormark moormarsh moormere moormill moorness moorpoint moorpool moorport moorshaw moorshed moorship moorspring moorstead moorstone moorstow moorthorp moorton moortor moorvale moorwell moorwick moorwood moorworth moss mossbarn mossbeck mossbird mossbourne mossbridge mossbrook mossburn mossbury mosscliff mosscombe mosscove mosscrag mosscroft mossdale mossdell mossden mossfell mossfen mossfield mossford mossfrith mossful mossgate mossglen mossham mosshaven mosshead mosshill mossholt mosshood mosshouse mosshowe mosshurst mossland mosslea mossless mosslet mossley mosslike mossmark mossmarsh mossmere mossmill mossmoor mossness mosspoint mosspool mossport mossridge mossship mossthorp mosston mosstor mossvale mosswell mosswick mosswood mossworth moth mothful mothhood mothless mothlet mothlike mothship mound moundful moundhood moundless moundlet moundlike moundship mountain mountainful mountainhood mountainless mountainlet mountainlike mountainship mouse mouseful mousehood mouseless mouselet mouselike mouseship mow mowed mower mowing mulberry mulberryful mulberryhood mulberryless mulberrylet mulberrylike mulberryship mule muleful mulehood muleless mulelet mulelike muleship mull mulled muller mulling murkiliness murkily murkiness murky murkyish murmur murmured murmurer murmuring muse mused muser musing musk muskful muskhood muskless musklet musklike muskship muster mustered musterer mustering myrtle myrtleful myrtlehood myrtleless myrtlelet myrtlelike myrtleship nail nailed nailer nailing narrow narrowish narrowly narrowness near nearish nearly nearness neat neatish neatly neatness nectar nectarful nectarhood nectarless nectarlet nectarlike nectarship needle needleful needlehood needleless needlelet needlelike needleship nest nestful nesthood nestle nestled nestler nestless nestlet nestlike nestling nestship net netful nethood netless netlet netlike netship nettle nettleful nettlehood nettleless nettlelet nettlelike nettleship new newish newly newness niche nicheful nichehood nicheless nichelet nichelike nicheship night nightbarn nightbeck nightbird nightbourne nightbridge nightbrook nightburn nightbury nightcliff nightcombe nightcove nightcrag nightcroft nightdale nightdell nightden nightfell nightfen nightfield nightford nightfrith nightful nightgate nightglen nightham nighthaven nighthead nighthill nightholt nighthood nighthouse nighthowe nighthurst nightland nightlea nightless nightlet nightley nightlike nightmark nightmarsh nightmere nightmill nightmoor nightness nightpoint nightpool nightport nightridge nightshaw nightshed nightship nightspring nightstead nightstone nightstow nightvale nightwell nightwick nightwood nightworth nimble nimbleish nimblely nimbleness noble nobleish noblely nobleness nod noded noder noding noisiliness noisily noisiness noisy noisyish nook nookful nookhood nookless "
    "nooklet nooklike nookship north northful northhood northless northlet northlike northship note noted noter notice noticed noticer noticing noting nourish nourished nourisher nourishing nudge nudged nudger nudging nurture nurtured nurturer nurturing oak oakbarn oakbeck oakbird oakbourne oakbridge oakbrook oakburn oakbury oakcliff oakcombe oakcove oakcrag oakcroft oakdale oakdell oakden oakfell oakfen oakfield oakford oakfrith oakful oakgate oakglen oakham oakhaven oakhead oakhill oakholt oakhood oakhouse oakhowe oakhurst oakland oaklea oakless oaklet oakley oaklike oakmark oakmarsh oakmere oakmill oakmoor oakness oakpoint oakpool oakport oakridge oakshaw oakshed oakship oakspring oakstead oakstone oakstow oakthorp oakton oaktor oakvale oakwell oakwick oakwood oakworth oar oarful oarhood oarless oarlet oarlike oarship oasis oasisful oasishood oasisless oasislet oasislike oasisship oat oatful oathood oatless oatlet oatlike oatship oblige obliged obliger obliging observe observed observer observing ocean oceanful oceanhood oceanless oceanlet oceanlike oceanship odd oddish oddly oddness offer offered offerer offering old oldish oldly oldness olive oliveful olivehood oliveless olivelet olivelike oliveship onyx onyxful onyxhood onyxless onyxlet onyxlike onyxship opal opalful opalhood opalless opallet opallike opalship open opened opener opening orchard orchardful orchardhood orchardless orchardlet orchardlike orchardship orchid orchidful orchidhood orchidless orchidlet orchidlike orchidship osprey ospreyful ospreyhood ospreyless ospreylet ospreylike ospreyship otter otterful otterhood otterless otterlet otterlike ottership owl owlful owlhood owlless owllet owllike owlship oxful oxhood oxless oxlet oxlike oxship oyster oysterful oysterhood oysterless oysterlet oysterlike oystership paddle paddled paddleful paddlehood paddleless paddlelet paddlelike paddler paddleship paddling pail pailful pailhood pailless paillet paillike pailship paint painted painter painting pale paleish palely paleness palm palmful palmhood palmless palmlet palmlike palmship panther pantherful pantherhood pantherless pantherlet pantherlike panthership parcel parcelful parcelhood parcelless parcellet parcellike parcelship parchment parchmentful parchmenthood parchmentless parchmentlet parchmentlike parchmentship pare pared parer paring pass passed passer passing paste pasted paster pasting pasture pastureful pasturehood pastureless pasturelet pasturelike pastureship patch patched patcher patching pause paused pauser pausing pave paved paver paving peach peachful peachhood peachless peachlet peachlike peachship peak peakful peakhood peakless peaklet peaklike peakship pear pearful pearhood pearl pearless pearlet pearlful pearlhood pearlike pearlless pearllet pearllike pearlship pearship peat peatful peathood peatless peatlet peatlike peatship pebble pebbleful pebblehood pebbleless pebblelet pebblelike pebbleship pecan pecanful pecanhood pecanless pecanlet pecanlike pecanship peck pecked pecker pecking peer peered peerer peering pelican pelicanful pelicanhood pelicanless pelicanlet pelicanlike pelicanship pepper pepperful pepperhood pepperless pepperlet pepperlike peppership perch perched percher perchful perchhood perching perchless perchlet perchlike perchship petal petalful petalhood petalless petallet petallike petalship pewter pewterful pewterhood pewterless pewterlet pewterlike pewtership pheasant pheasantful pheasanthood pheasantless pheasantlet pheasantlike pheasantship pick picked picker picking pier pierful pierhood pierless pierlet pierlike piership pigeon pigeonful pigeonhood pigeonless pigeonlet pigeonlike pigeonship pike pikeful pikehood pikeless pikelet pikelike pikeship pile piled piler piling pine pinebarn pinebeck pinebird pinebourne pinebridge pinebrook pineburn pinebury pinecliff pinecombe pinecove pinecrag pinecroft pinedale pinedell pineden pinefell pinefen pinefield pineford pinefrith pineful pinegate pineglen pineham pinehaven pinehead pinehill pineholt pinehood pinehouse pinehowe pinehurst pineland pinelea pineless pinelet pineley pinelike pinemark pinemarsh pinemere pinemill pinemoor pineness pinepoint pinepool pineport pineridge pineshaw pineshed pineship pinespring pinestead pinestone pinestow pinethorp pineton pinetor pinevale pinewell pinewick pinewood pineworth pinion pinionful pinionhood pinionless pinionlet pinionlike pinionship pitch pitched pitcher pitching plain plainful plainhood plainish plainless plainlet plainlike plainly plainness plainship plank plankful plankhood plankless planklet planklike plankship plant planted planter planting plateau plateauful plateauhood plateauless plateaulet plateaulike plateauship play played player playing plead pleaded pleader pleading pledge pledged pledger pledging plod ploded ploder ploding plough ploughful ploughhood ploughless ploughlet ploughlike ploughship plow plowed plower plowing pluck plucked plucker plucking plum plumful plumhood plumless plumlet plumlike plump plumpish plumply plumpness plumship plunge plunged plunger plunging point pointed pointer pointing polish polished polisher polishing polite politeish politely politeness pond ponder pondered ponderer pondering pondful pondhood pondless pondlet pondlike pondship pony ponyful ponyhood ponyless ponylet ponylike ponyship poor poorish poorly poorness poplar poplarful poplarhood poplarless poplarlet poplarlike poplarship poppy poppyful poppyhood poppyless poppylet poppylike poppyship porch porchful porchhood porchless porchlet porchlike porchship portal portalful portalhood portalless portallet portallike portalship posh poshish poshly poshness post postful posthood postless postlet postlike postship pot potful pothood potless potlet potlike potship pour poured pourer pouring prairie prairieful prairiehood prairieless prairielet prairielike prairieship praise praised praiser praising press pressed presser pressing prism prismful prismhood prismless prismlet prismlike prismship prize prized prizer prizing prompt prompted prompter prompting prosper prospered prosperer prospering proud proudish proudly proudness prune pruned pruner pruning puddle puddleful puddlehood puddleless puddlelet puddlelike puddleship pull pulled puller pulling pump pumped pumper pumpful pumphood pumping pumpless pumplet pumplike pumpship push pushed pusher pushing quail quailful quailhood quailless quaillet quaillike quailship quaint quaintish quaintly quaintness quarry quarryful quarryhood quarryless quarrylet quarrylike quarryship quartz quartzful quartzhood quartzless quartzlet quartzlike quartzship quay quayful quayhood quayless quaylet quaylike quayship queenbarn queenbeck queenbird queenbourne queenbridge queenbrook queenburn queenbury queencliff queencombe queencove queencrag queencroft queendale queendell queenden queenfell queenfen queenfield queenford queenfrith queengate queenglen queenham queenhaven queenhead queenhill queenholt queenhouse queenhowe queenhurst queenland queenlea queenley queenmark queenmarsh queenmere queenmill queenmoor queenpoint queenpool queenport queenridge queenshaw queenshed queenspring queenstead queenstone queenstow queenthorp queenton queentor queenvale queenwell queenwick queenwood queenworth quell quelled queller quelling quench quenched quencher quenching quick quicken quickened quickener quickening quickish quickly quickness quiet quietish quietly quietness quill quillful quillhood quillless quilllet quilllike quillship quilt quiltful quilthood quiltless quiltlet quiltlike quiltship quiver quivered quiverer quivering rabbit rabbitful rabbithood rabbitless rabbitlet rabbitlike rabbitship raft raftful rafthood raftless raftlet raftlike raftship rail railful railhood railless raillet raillike railship rain rainbarn rainbeck rainbird rainbourne rainbridge rainbrook rainburn rainbury raincliff raincombe raincove raincrag raincroft raindale raindell rainden rainfell rainfen rainfield rainford rainfrith rainful raingate rainglen rainham rainhaven rainhead rainhill rainholt rainhood rainhouse rainhowe rainhurst rainiliness rainily raininess rainland rainlea rainless rainlet rainley rainlike rainmark rainmarsh rainmere rainmill rainmoor rainpoint rainpool rainport rainridge rainshaw rainshed rainship rainspring rainstead rainstone rainstow rainthorp rainton raintor rainvale rainwell rainwick rainwood rainworth rainy rainyish raise raised raiser raisin raisinful raising raisinhood raisinless raisinlet raisinlike raisinship rake rakeful rakehood rakeless rakelet rakelike rakeship rallied rallier rally rallying ram ramble rambled rambler rambling ramful ramhood ramless ramlet ramlike rampart rampartful ramparthood rampartless rampartlet rampartlike rampartship ramship ranch ranchful ranchhood ranchless ranchlet ranchlike ranchship range ranged ranger ranging rapid rapidish rapidly rapidness rare rareish rarely rareness raven ravenbarn ravenbeck ravenbird ravenbourne ravenbridge ravenbrook ravenburn ravenbury ravencliff ravencombe ravencove ravencrag ravencroft ravendale ravendell ravenden ravenfell ravenfen ravenfield ravenford ravenfrith ravenful ravengate ravenglen ravenham ravenhaven ravenhead ravenhill ravenholt ravenhood ravenhouse ravenhowe ravenhurst ravenland ravenlea ravenless ravenlet ravenley ravenlike ravenmark ravenmarsh ravenmere ravenmill ravenmoor ravenpoint ravenpool ravenport ravenridge ravenshaw ravenshed ravenship ravenspring ravenstead ravenstone ravenstow raventhorp raventon raventor ravenvale ravenwell ravenwick ravenwood ravenworth raw rawish rawly rawness reach reached reacher reaching reap reaped reaper reaping reckon reckoned reckoner reckoning redbarn redbeck redbird redbourne redbridge redbrook redburn redbury redcliff redcombe redcove redcrag redcroft redfell redfen redfield redford redfrith redgate redglen redham redhaven redhead redhill redholt redhouse redhowe redhurst redland redlea redley redmark redmarsh redmere redmill redmoor redness redpoint redpool redport redridge redshaw redshed redspring redstead redstone redstow redthorp redton redtor redvale redwell redwick redwood redworth reed reedful reedhood reedless reedlet reedlike reedship reef reefful reefhood reefless reeflet reeflike reefship rein reinful reinhood reinless reinlet reinlike reinship rejoice rejoiced rejoicer rejoicing relish relished relisher relishing remain remained remainer remaining remark remarked remarker remarking render rendered renderer rendering renew renewed renewer renewing repair repaired repairer repairing rest rested rester resting retire retired retirer retiring rich richish richly richness ridge ridgeful ridgehood ridgeless ridgelet ridgelike ridgeship rift riftful rifthood riftless riftlet riftlike riftship rill rillful rillhood rillless rilllet rilllike rillship rind rindful rindhood rindless rindlet rindlike rindship rinse rinsed rinser rinsing ripe ripeish ripely ripen ripened ripener ripeness ripening rise rised riser rising river riverbarn riverbeck riverbird riverbourne riverbridge riverbrook riverburn riverbury rivercliff rivercombe rivercove rivercrag rivercroft riverdale riverdell riverden riverfell riverfen riverfield riverford riverfrith riverful rivergate riverglen riverham riverhaven riverhead riverhill riverholt riverhood riverhouse riverhowe riverhurst riverland riverlea riverless riverlet riverley riverlike rivermark rivermarsh rivermere rivermill rivermoor riverness riverpoint riverpool riverport rivershaw rivershed rivership riverspring riverstead riverstone riverstow riverthorp riverton rivertor rivervale riverwell riverwick riverwood riverworth road roadful roadhood roadless roadlet roadlike roadship roam roamed roamer roaming roast roasted roaster roasting robin robinful robinhood robinless robinlet robinlike robinship rock rockful rockhood rockless rocklet rocklike rockship roll rolled roller rolling rook rookful rookhood rookless rooklet rooklike rookship roost roosted rooster roosting root rootful roothood rootless rootlet rootlike "
    "rootship rope ropeful ropehood ropeless ropelet ropelike ropeship rose roseful rosehood roseless roselet roselike roseship rough roughish roughly roughness round roundish roundly roundness rove roved rover roving row rowan rowanful rowanhood rowanless rowanlet rowanlike rowanship rowed rower rowing ruby rubyful rubyhood rubyless rubylet rubylike rubyship rudder rudderful rudderhood rudderless rudderlet rudderlike ruddership rude rudeish rudely rudeness rug rugful rugged ruggedish ruggedly ruggedness rughood rugless ruglet ruglike rugship rummage rummaged rummager rummaging rush rushed rusher rushful rushhood rushing rushless rushlet rushlike rushship rust rustful rusthood rustiliness rustily rustiness rustle rustled rustler rustless rustlet rustlike rustling rustship rusty rustyish rye ryeful ryehood ryeless ryelet ryelike ryeship sad saddle saddleful saddlehood saddleless saddlelet saddlelike saddleship sadish sadly sadness safe safeish safely safeness sage sageful sagehood sageless sagelet sagelike sageship sail sailed sailer sailful sailhood sailing sailless saillet saillike sailship salmon salmonful salmonhood salmonless salmonlet salmonlike salmonship salt saltful salthood saltiliness saltily saltiness saltless saltlet saltlike saltship salty saltyish salvage salvaged salvager salvaging sample sampled sampler sampling sand sandful sandhood sandless sandlet sandlike sandship sapling saplingful saplinghood saplingless saplinglet saplinglike saplingship satchel satchelful satchelhood satchelless satchellet satchellike satchelship saunter sauntered saunterer sauntering save saved saver saving scale scaleful scalehood scaleless scalelet scalelike scaleship scamper scampered scamperer scampering scan scaned scaner scaning scarce scarceish scarcely scarceness scarf scarfful scarfhood scarfless scarflet scarflike scarfship scatter scattered scatterer scattering school schoolful schoolhood schoolless schoollet schoollike schoolship scoop scooped scooper scooping scour scoured scourer scouring scow scowful scowhood scowless scowlet scowlike scowship scrub scrubed scruber scrubing sculpt sculpted sculpter sculpting seabarn seabeck seabird seabourne seabridge seabrook seaburn seabury seacliff seacombe seacove seacrag seacroft seadale seadell seaden seafell seafen seafield seaford seafrith seagate seaglen seaham seahaven seahead seahill seaholt seahouse seahowe seahurst seal sealand sealea sealed sealer sealey sealful sealhood sealing sealless seallet seallike sealship seam seamark seamarsh seamere seamful seamhood seamill seamless seamlet seamlike seamoor seamship seaness seapoint seapool seaport search searched searcher searching searidge seashaw seashed season seasoned seasoner seasoning seaspring seastead seastone seastow seathorp seaton seator seavale seawell seawick seawood seaworth sedge sedgeful sedgehood sedgeless sedgelet sedgelike sedgeship seed seedful seedhood seedless seedlet seedlike seedship seek seeked seeker seeking settle settled settler settling sever severed severer severing sew sewed sewer sewing shack shackful shackhood shackless shacklet shacklike shackship shade shadeful shadehood shadeless shadelet shadelike shadeship shadiliness shadily shadiness shady shadyish shale shaleful shalehood shaleless shalelet shalelike shaleship shallow shallowish shallowly shallowness shape shaped shaper shaping share shared sharer sharing sharp sharpen sharpened sharpener sharpening sharpish sharply sharpness shawl shawlful shawlhood shawlless shawllet shawllike shawlship shear sheared shearer shearful shearhood shearing shearless shearlet shearlike shearship shed shedful shedhood shedless shedlet shedlike shedship shell shellful shellhood shellless shelllet shelllike shellship shelter sheltered shelterer sheltering shepherd shepherdbarn shepherdbeck shepherdbird shepherdbourne shepherdbridge shepherdbrook shepherdburn shepherdbury shepherdcliff shepherdcombe shepherdcove shepherdcrag shepherdcroft shepherded shepherder shepherdfell shepherdfen shepherdfield shepherdford shepherdfrith shepherdgate shepherdglen shepherdham shepherdhaven shepherdhead shepherdhill shepherdholt shepherdhouse shepherdhowe shepherdhurst shepherding shepherdland shepherdlea shepherdley shepherdmark shepherdmarsh shepherdmere shepherdmill shepherdmoor shepherdness shepherdpoint shepherdpool shepherdport shepherdridge shepherdshaw shepherdshed shepherdspring shepherdstead shepherdstone shepherdstow shepherdthorp shepherdton shepherdtor shepherdvale shepherdwell shepherdwick shepherdwood shepherdworth shily shimmer shimmered shimmerer shimmering shine shined shiner shiness shingle shingleful shinglehood shingleless shinglelet shinglelike shingleship shiniliness shinily shininess shining shiny shinyish ship shipful shiphood shipless shiplet shiplike shipship shoal shoalful shoalhood shoalless shoallet shoallike shoalship shore shoreful shorehood shoreless shorelet shorelike shoreship short shorten shortened shortener shortening shortish shortly shortness shout shouted shouter shouting shovel shoveled shoveler shoveling shrewd shrewdish shrewdly shrewdness shrub shrubful shrubhood shrubless shrublet shrublike shrubship shy shyish sickle sickleful sicklehood sickleless sicklelet sicklelike sickleship sift sifted sifter sifting sigh sighed sigher sighing sightliness signal signaled signaler signaling silent silentish silently silentness silk silkful silkhood silkless silklet silklike silkship sill sillful sillhood sillless silllet silllike sillship silo siloful silohood siloless silolet silolike siloship silver silverbarn silverbeck silverbird silverbourne silverbridge silverbrook silverburn silverbury silvercliff silvercombe silvercove silvercrag silvercroft silverdale silverdell silverden silverfell silverfen silverfield silverford silverfrith silverful silvergate silverglen silverham silverhaven silverhead silverhill silverholt silverhood silverhouse silverhowe silverhurst silverland silverlea silverless silverlet silverley silverlike silvermark silvermarsh silvermere silvermill silvermoor silverness silverpoint silverpool silverport silvershaw silvershed silvership silverspring silverstead silverstone silverstow silverthorp silverton silvertor silvervale silverwell silverwick silverwood silverworth simmer simmered simmerer simmering simple simpleish simplely simpleness sip siped siper siping sit sited siter siting sketch sketched sketcher sketching skiff skiffful skiffhood skiffless skifflet skifflike skiffship skim skimed skimer skiming skip skiped skiper skiping skylark skylarkful skylarkhood skylarkless skylarklet skylarklike skylarkship slacken slackened slackener slackening slate slateful slatehood slateless slatelet slatelike slateship sled sledful sledhood sledless sledlet sledlike sledship sleek sleekish sleekly sleekness sleep sleeped sleeper sleeping sleet sleetful sleethood sleetless sleetlet sleetlike sleetship slender slenderish slenderly slenderness slice sliced slicer slicing slide slided slider sliding slight slightish slightly slightness slim slimish slimly slimness sloop sloopful sloophood sloopless slooplet slooplike sloopship slope slopeful slopehood slopeless slopelet slopelike slopeship slow slowish slowly slowness slumber slumbered slumberer slumbering small smallish smallly smallness smile smiled smiler smiling smith smithful smithhood smithless smithlet smithlike smithship smooth smoothed smoother smoothing smoothish smoothly smoothness snail snailful snailhood snailless snaillet snaillike snailship snipe snipeful snipehood snipeless snipelet snipelike snipeship snow snowbarn snowbeck snowbird snowbourne snowbridge snowbrook snowburn snowbury snowcliff snowcombe snowcove snowcrag snowcroft snowdale snowdell snowden snowfell snowfen snowfield snowford snowfrith snowful snowgate snowglen snowham snowhaven snowhead snowhill snowholt snowhood snowhouse snowhowe snowhurst snowland snowlea snowless snowlet snowley snowlike snowmark snowmarsh snowmere snowmill snowmoor snowness snowpoint snowpool snowport snowridge snowshaw snowshed snowship snowspring snowstead snowstone snowstow snowthorp snowton snowtor snowvale snug snugish snugly snugness soak soaked soaker soaking soar soared soarer soaring soft soften softened softener softening softish softly softness solemn solemnish solemnly solemnness solid solidish solidly solidness somber somberish somberly somberness sore soreish sorely soreness sorrel sorrelful sorrelhood sorrelless sorrellet sorrellike sorrelship sort sorted sorter sorting sour sourish sourly sourness south southful southhood southless southlet southlike southship sow sowed sower sowing spade spadeful spadehood spadeless spadelet spadelike spadeship span spaned spaner spaning spare spareish sparely spareness spark sparked sparker sparkful sparkhood sparking sparkle sparkled sparkler sparkless sparklet sparklike sparkling sparkship sparrow sparrowful sparrowhood sparrowless sparrowlet sparrowlike sparrowship sparse sparseish sparsely sparseness speak speaked speaker speaking spell spelled speller spelling spend spended spender spending spice spiceful spicehood spiceless spicelet spicelike spiceship spin spindle spindleful spindlehood spindleless spindlelet spindlelike spindleship spined spiner spining spire spireful spirehood spireless spirelet spirelike spireship splash splashed splasher splashing split splited spliter spliting spool spoolful spoolhood spoolless spoollet spoollike spoolship spread spreaded spreader spreading spring springbarn springbeck springbird springbok springbokful springbokhood springbokless springboklet springboklike springbokship springbourne springbridge springbrook springburn springbury springcliff springcombe springcove springcrag springcroft springdale springdell springden springfell springfen springfield springford springfrith springful springham springhaven springhead springhill springholt springhood springhouse springhowe springhurst springland springlea springless springlet springley springlike springmark springmarsh springmere springmill springmoor springness springpoint springpool springport springridge springshaw springshed springship springstead springstone springstow springthorp springton springtor springvale springwell springwick springwood springworth sprout sprouted sprouter sprouting spruce spruceful sprucehood spruceless sprucelet sprucelike spruceship spur spured spurer spurful spurhood spuring spurless spurlet spurlike spurship squall squallful squallhood squallless squalllet squalllike squallship squint squinted squinter squinting squirrel squirrelful squirrelhood squirrelless squirrellet squirrellike squirrelship stable stableful stablehood stableless stablelet stablelike stableship stack stacked stacker stackful stackhood stacking stackless stacklet stacklike stackship staff staffful staffhood staffless stafflet stafflike staffship stag stagful staghood stagless staglet staglike stagship stair stairful stairhood stairless stairlet stairlike stairship stake stakeful stakehood stakeless stakelet stakelike stakeship stale staleish stalely staleness stall stallful stallhood stallless stalllet stalllike stallship stand standed stander standing starbarn starbeck starbird starbourne starbridge starbrook starburn starbury starcliff starcombe starcove starcrag starcroft stardale stardell starden stare stared starer starfell starfen starfield starford starfrith stargate starglen starham starhaven starhead starhill starholt starhouse starhowe starhurst staring stark starkish starkly starkness starland starlea starley starling starlingful starlinghood starlingless starlinglet starlinglike starlingship starmark starmarsh starmere starmill starmoor starness starpoint starpool starport starshaw starshed starspring starstead starstone starstow start started starter starthorp starting startle startled startler startling starton startor starvale starwell starwick starwood starworth staunch staunchish staunchly staunchness stave staveful "
    "stavehood staveless stavelet stavelike staveship stay stayed stayer staying steadiliness steadily steadiness steady steadyish steed steedful steedhood steedless steedlet steedlike steedship steel steelful steelhood steelless steellet steellike steelship steep steepish steeple steepleful steeplehood steepleless steeplelet steeplelike steepleship steeply steepness steer steered steerer steering stem stemful stemhood stemless stemlet stemlike stemship step steped steper steping steppe steppeful steppehood steppeless steppelet steppelike steppeship stern sternish sternly sternness stickiliness stickily stickiness sticky stickyish stiff stiffish stiffly stiffness stile stileful stilehood stileless stilelet stilelike stileship still stillish stillly stillness stir stired stirer stiring stitch stitched stitcher stitching stoat stoatful stoathood stoatless stoatlet stoatlike stoatship stoke stoked stoker stoking stone stonebarn stonebeck stonebird stonebourne stonebridge stonebrook stoneburn stonebury stonecliff stonecombe stonecove stonecrag stonecroft stonedale stonedell stoneden stonefell stonefen stonefield stoneford stonefrith stoneful stonegate stoneglen stoneham stonehaven stonehead stonehill stoneholt stonehood stonehouse stonehowe stonehurst stoneland stonelea stoneless stonelet stoneley stonelike stonemark stonemarsh stonemere stonemill stonemoor stoneness stonepoint stonepool stoneport stoneridge stoneshaw stoneshed stoneship stonespring stonestead stonestow stonethorp stoneton stonetor stonevale stonewell stonewick stonewood stoneworth stool stoolful stoolhood stoolless stoollet stoollike stoolship stoop stooped stooper stooping store stored storer storing stork storkful storkhood storkless storklet storklike storkship storm stormbarn stormbeck stormbird stormbourne stormbridge stormbrook stormburn stormbury stormcliff stormcombe stormcove stormcrag stormcroft stormdale stormdell stormden stormfell stormfen stormfield stormford stormfrith stormful stormgate stormglen stormham stormhaven stormhead stormhill stormholt stormhood stormhouse stormhowe stormhurst stormland stormlea stormless stormlet stormley stormlike stormness stormpoint stormpool stormport stormridge stormshaw stormshed stormship stormspring stormstead stormstone stormstow stormthorp stormton stormtor stormvale stormwell stormwick stormwood stormworth stout stoutish stoutly stoutness stove stoveful stovehood stoveless stovelet stovelike stoveship stow stowed stower stowing straighten straightened straightener straightening strand strandful strandhood strandless strandlet strandlike strandship strange strangeish strangely strangeness straw strawful strawhood strawless strawlet strawlike strawship stray strayed strayer straying stream streamful streamhood streamless streamlet streamlike streamship street streetful streethood streetless streetlet streetlike streetship stretch stretched stretcher stretching strict strictish strictly strictness stride strided strider striding stroll strolled stroller strolling strong strongish strongly strongness studied studier study studying sturdied sturdier sturdiliness sturdily sturdiness sturdy sturdying sturdyish subtle subtleish subtlely subtleness sultriliness sultrily sultriness sultry sultryish summerbarn summerbeck summerbird summerbourne summerbridge summerbrook summerburn summerbury summercliff summercombe summercove summercrag summercroft summerdale summerdell summerden summerfell summerfen summerfield summerford summerfrith summergate summerglen summerham summerhaven summerhead summerhill summerholt summerhouse summerhowe summerhurst summerland summerlea summerley summermark summermarsh summermere summermill summermoor summerness summerpoint summerpool summerport summershaw summershed summerspring summerstead summerstone summerstow summerthorp summerton summertor summervale summerwell summerwick summerwood summerworth summit summitful summithood summitless summitlet summitlike summitship summon summoned summoner summoning sun sunbarn sunbeck sunbird sunbourne sunbridge sunbrook sunburn sunbury suncliff suncombe suncove suncrag suncroft sundale sundell sunden sunfell sunfen sunfield sunford sunfrith sunful sungate sunglen sunham sunhaven sunhead sunhill sunholt sunhood sunhouse sunhowe sunhurst sunland sunlea sunless sunlet sunley sunlike sunmark sunmarsh sunmere sunmill sunmoor sunniliness sunnily sunniness sunny sunnyish sunpoint sunpool sunport sunridge sunshaw sunshed sunship sunspring sunstead sunstone sunstow sunthorp sunton suntor sunvale sunwell sunwick sunwood sunworth surge surged surger surging swallow swallowful swallowhood swallowless swallowlet swallowlike swallowship swamp swampful swamphood swampless swamplet swamplike swampship swan swanbarn swanbeck swanbird swanbourne swanbridge swanbrook swanburn swanbury swancliff swancombe swancove swancrag swancroft swandale swandell swanden swanfell swanfen swanfield swanford swanfrith swanful swangate swanglen swanham swanhaven swanhead swanhill swanholt swanhood swanhouse swanhowe swanhurst swanland swanlea swanless swanlet swanley swanlike swanmark swanmarsh swanmere swanmill swanmoor swanpoint swanpool swanport swanridge swanshaw swanshed swanship swanspring swanstead swanstone swanstow swanthorp swanton swantor swanvale swanwell swanwick swanwood swanworth sway swayed swayer swaying sweep sweeped sweeper sweeping sweet sweetish sweetly sweetness swell swelled sweller swelling swift swiftish swiftly swiftness swim swimed swimer swiming swing swinged swinger swinging sycamore sycamoreful sycamorehood sycamoreless sycamorelet sycamorelike sycamoreship table tableful tablehood tableless tablelet tablelike tableship tall tallied tallier tallish tallly tallness tallow tallowful tallowhood tallowless tallowlet tallowlike tallowship tally tallying tame tamed tameish tamely tameness tamer taming taper tapered taperer tapering tarn tarnful tarnhood tarnless tarnlet tarnlike tarnship taste tasted taster tasting taut tautish tautly tautness teach teached teacher teaching teal tealful tealhood tealless teallet teallike tealship temple templeful templehood templeless templelet templelike templeship tend tended tender tenderish tenderly tenderness tending tern ternful ternhood ternless ternlet ternlike ternship thatch thatched thatcher thatching thick thicken thickened thickener thickening thicket thicketful thickethood thicketless thicketlet thicketlike thicketship thickish thickly thickness thin thinish thinly thinness thistle thistleful thistlehood thistleless thistlelet thistlelike thistleship thorn thornbarn thornbeck thornbird thornbourne thornbridge thornbrook thornburn thornbury thorncliff thorncombe thorncove thorncrag thorncroft thorndale thorndell thornden thornfell thornfen thornfield thornford thornfrith thornful thorngate thornglen thornham thornhaven thornhead thornhill thornholt thornhood thornhouse thornhowe thornhurst thornland thornlea thornless thornlet thornley thornlike thornmark thornmarsh thornmere thornmill thornmoor thornpoint thornpool thornport thornridge thornshaw thornshed thornship thornspring thornstead thornstone thornstow thornthorp thornton thorntor thornvale thornwell thornwick thornwood thornworth thread threaded threader threading thrive thrived thriver thriving throw throwed thrower throwing thrush thrushful thrushhood thrushless thrushlet thrushlike thrushship thunder thunderful thunderhood thunderless thunderlet thunderlike thundership tide tideful tidehood tideless tidelet tidelike tideship tidied tidier tidiliness tidily tidiness tidy tidying tidyish tie tied tier tiger tigerful tigerhood tigerless tigerlet tigerlike tigership tiing till tilled tiller tillerful tillerhood tillerless tillerlet tillerlike tillership tilling tilt tilted tilter tilting timber timberful timberhood timberless timberlet timberlike timbership tin tinful tinhood tiniliness tinily tininess tinless tinlet tinlike tinship tiny tinyish toad toadful toadhood toadless toadlet toadlike toadship toast toasted toaster toasting toil toiled toiler toiling tomb tombful tombhood tombless tomblet tomblike tombship torch torchful torchhood torchless torchlet torchlike torchship toss tossed tosser tossing tough toughish toughly toughness tower towerful towerhood towerless towerlet towerlike towership trace traced tracer tracing trade traded trader trading trail trailful trailhood trailless traillet traillike trailship tramp tramped tramper tramping tranquil tranquilish tranquilly tranquilness travel traveled traveler traveling tread treaded treader treading treasure treasured treasurer treasuring tree treeful treehood treeless treelet treelike treeship trek treked treker treking trellis trellisful trellishood trellisless trellislet trellislike trellisship trench trenchful trenchhood trenchless trenchlet trenchlike trenchship trim trimed trimer triming trimish trimly trimness trot troted troter troting trout troutful trouthood troutless troutlet troutlike troutship trudge trudged trudger trudging true trueish truely trueness trundle trundled trundler trundling tuck tucked tucker tucking tug tuged tuger tuging tulip tulipful tuliphood tulipless tuliplet tuliplike tulipship tumble tumbled tumbler tumbling tundra tundraful tundrahood tundraless tundralet tundralike tundraship tunnel tunnelful tunnelhood tunnelless tunnellet tunnellike tunnelship turf turfful turfhood turfless turflet turflike turfship turn turned turner turning turnip turnipful turniphood turnipless turniplet turniplike turnipship turret turretful turrethood turretless turretlet turretlike turretship tusk tuskful tuskhood tuskless tusklet tusklike tuskship twig twigful twighood twigless twiglet twiglike twigship twine twineful twinehood twineless twinelet twinelike twineship twirl twirled twirler twirling twist twisted twister twisting udder udderful udderhood udderless udderlet udderlike uddership umber umberful umberhood umberless umberlet umberlike umbership unfold unfolded unfolder unfolding unwind unwinded unwinder unwinding urchin urchinful urchinhood urchinless urchinlet urchinlike urchinship usher ushered usherer ushering utter uttered utterer uttering vague vagueish vaguely vagueness vale valeful valehood valeless valelet valelike valeship valley valleyful valleyhood valleyless valleylet valleylike valleyship vane vaneful vanehood vaneless vanelet vanelike vaneship vast vastish vastly vastness vault vaultful vaulthood vaultless vaultlet vaultlike vaultship veer veered veerer veering veil veilful veilhood veilless veillet veillike veilship vein veinful veinhood veinless veinlet veinlike veinship venture ventured venturer venturing vessel vesselful vesselhood vesselless vessellet vessellike vesselship village villageful villagehood villageless villagelet villagelike villageship vine vineful vinehood vineless vinelet vinelike vineship violet violetful violethood violetless violetlet violetlike violetship vivid vividish vividly vividness vole voleful volehood voleless volelet volelike voleship wade waded wader wading wagon wagonful wagonhood wagonless wagonlet wagonlike wagonship wait waited waiter waiting wake waked waker waking walk walked walker walking walnut walnutful walnuthood walnutless walnutlet walnutlike walnutship walrus walrusful walrushood walrusless walruslet walruslike walrusship wander wandered wanderer wandering warble warbled warbler warblerful warblerhood warblerless warblerlet warblerlike warblership warbling wariliness warily wariness warm warmed warmer warming warmish warmly warmness warren warrenful warrenhood warrenless warrenlet warrenlike warrenship wary waryish wash washed washer washing watch watched watcher watching water watered waterer waterful waterhood watering waterless waterlet waterlike watership wave waved waveful wavehood waveless wavelet wavelike waver waveship waving wax waxful waxhood waxless waxlet waxlike waxship weak weakish weakly weakness weariliness wearily weariness weary wearyish weasel weaselful "
    "weaselhood weaselless weasellet weasellike weaselship weave weaved weaver weaving weigh weighed weigher weighing weir weirful weirhood weirless weirlet weirlike weirship weld welded welder welding well wellful wellhood wellless welllet welllike wellship wet wetish wetly wetness whale whaleful whalehood whaleless whalelet whalelike whaleship wharf wharfful wharfhood wharfless wharflet wharflike wharfship wheat wheatful wheathood wheatless wheatlet wheatlike wheatship wheel wheelful wheelhood wheelless wheellet wheellike wheelship whitebarn whitebeck whitebird whitebourne whitebridge whitebrook whiteburn whitebury whitecliff whitecombe whitecove whitecrag whitecroft whitedale whitedell whiteden whitefell whitefen whitefield whiteford whitefrith whitegate whiteglen whiteham whitehaven whitehead whitehill whiteholt whitehouse whitehowe whitehurst whiteland whitelea whiteley whitemark whitemarsh whitemere whitemill whitemoor whiteness whitepoint whitepool whiteport whiteridge whiteshaw whiteshed whitespring whitestead whitestone whitestow whitethorp whiteton whitetor whitevale whitewell whitewick whitewood whiteworth whittle whittled whittler whittling wide wideish widely widen widened widener wideness widening wield wielded wielder wielding wild wildish wildly wildness willow willowful willowhood willowless willowlet willowlike willowship win wind windbarn windbeck windbird windbourne windbridge windbrook windburn windbury windcliff windcombe windcove windcrag windcroft winded winder windfell windfen windfield windford windfrith windful windgate windglen windham windhaven windhead windhill windholt windhood windhouse windhowe windhurst windiliness windily windiness winding windland windlea windless windlet windley windlike windmark windmarsh windmere windmill windmillful windmillhood windmillless windmilllet windmilllike windmillship windmoor windness windpoint windpool windport windridge windshaw windshed windship windspring windstead windstone windstow windthorp windton windtor windvale windwell windwick windwood windworth windy windyish wined winer wining winnow winnowed winnower winnowing winterbarn winterbeck winterbird winterbourne winterbridge winterbrook winterburn winterbury wintercliff wintercombe wintercove wintercrag wintercroft winterdale winterdell winterden winterfell winterfen winterfield winterford winterfrith wintergate winterglen winterham winterhaven winterhead winterhill winterholt winterhouse winterhowe winterhurst winterland winterlea winterley wintermark wintermarsh wintermere wintermill wintermoor winterness winterpoint winterpool winterport wintershaw wintershed winterspring winterstead winterstone winterstow winterthorp winterton wintertor wintervale winterwell winterwick winterwood winterworth wise wiseish wisely wiseness wish wished wisher wishing wittiliness wittily wittiness witty wittyish wolf wolfbarn wolfbeck wolfbird wolfbourne wolfbridge wolfbrook wolfburn wolfbury wolfcliff wolfcombe wolfcove wolfcrag wolfcroft wolfdale wolfdell wolfden wolfful wolfgate wolfglen wolfham wolfhaven wolfhead wolfhill wolfholt wolfhood wolfhouse wolfhowe wolfhurst wolfland wolflea wolfless wolflet wolfley wolflike wolfmark wolfmarsh wolfmere wolfmill wolfmoor wolfness wolfpoint wolfpool wolfport wolfridge wolfshaw wolfshed wolfship wolfspring wolfstead wolfstone wolfstow wolfthorp wolfton wolftor wolfvale wolfwell wolfwick wolfwood wolfworth wonder wondered wonderer wondering wood woodbarn woodbeck woodbird woodbourne woodbridge woodbrook woodburn woodbury woodcliff woodcombe woodcove woodcrag woodcroft woodfell woodfen woodfield woodford woodfrith woodful woodgate woodglen woodham woodhaven woodhead woodhill woodholt woodhood woodhouse woodhowe woodhurst woodland woodlea woodless woodlet woodley woodlike woodmark woodmarsh woodmere woodmill woodmoor woodness woodpoint woodpool woodport woodridge woodshaw woodshed woodship woodspring woodstead woodstone woodstow woodthorp woodton woodtor woodvale woodwell woodwick woodworth wool woolful woolhood woolless woollet woollike woolship work worked worker working wren wrenbarn wrenbeck wrenbird wrenbourne wrenbridge wrenbrook wrenburn wrenbury wrencliff wrencombe wrencove wrencrag wrencroft wrendale wrendell wrenden wrenfell wrenfen wrenfield wrenford wrenfrith wrenful wrengate wrenglen wrenham wrenhaven wrenhead wrenhill wrenholt wrenhood wrenhouse wrenhowe wrenhurst wrenland wrenlea wrenless wrenlet wrenley wrenlike wrenmark wrenmarsh wrenmere wrenmill wrenmoor wrenpoint wrenpool wrenport wrenridge wrenshaw wrenshed wrenship wrenspring wrenstead wrenstone wrenstow wrenthorp wrenton wrentor wrenvale wrenwell wrenwick wrenwood wrenworth write writed writer writing yard yardful yardhood yardless yardlet yardlike yardship yarn yarnful yarnhood yarnless yarnlet yarnlike yarnship yew yewful yewhood yewless yewlet yewlike yewship yield yielded yielder yielding young youngish youngly youngness";

}  // namespace

const std::vector<std::string>& builtin_words() {
  static const std::vector<std::string> words = [] {
    std::vector<std::string> out;
    std::string cur;
    for (const char* p = kWords;; ++p) {
      if (*p == ' ' || *p == '\0') {
        if (!cur.empty()) out.push_back(cur);
        cur.clear();
        if (*p == '\0') break;
      } else {
        cur += *p;
      }
    }
    return out;
  }();
  return words;
}

}  // namespace numforge::data
